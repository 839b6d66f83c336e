#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN // TODO-stub
#include "doctest.h"
