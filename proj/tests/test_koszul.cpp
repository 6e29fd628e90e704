#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder koszul") { SUCCEED(); }
