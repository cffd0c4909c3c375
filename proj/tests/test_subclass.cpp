#include <doctest.h>
TEST_CASE("placeholder_test_subclass") { CHECK(true); }
