#pragma once

#define STOCLAB_VERSION "0.1.0"
