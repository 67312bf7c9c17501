#pragma once

#define FNLS_VERSION "0.1.0"
