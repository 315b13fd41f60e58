#pragma once

#define REALIT_VERSION "0.1.0"
