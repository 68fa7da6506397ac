#pragma once

#define HITCHIN_VERSION_MAJOR 1
#define HITCHIN_VERSION_MINOR 0
#define HITCHIN_VERSION_PATCH 0
#define HITCHIN_VERSION "1.0.0"
