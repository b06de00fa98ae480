#include <doctest.h>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

using namespace naijavar;

TEST_SUITE("text") {
  TEST_CASE("utf8 round trip and invalid offsets") {
    const std::string s = "θɪŋ a";
    CHECK(text::encode_utf8(text::decode_utf8(s)) == s);
    CHECK(text::decode_utf8(s).size() == 5);
    CHECK_FALSE(text::find_invalid_utf8(s).has_value());
    const std::string bad = std::string("ab") + char(0xC3);
    CHECK(text::find_invalid_utf8(bad) == 2u);
    CHECK_THROWS_AS(text::decode_utf8(bad), ValidationError);
    CHECK(text::find_invalid_utf8(std::string("a\xED\xA0\x80")) == 1u);  // surrogate
    CHECK(text::find_invalid_utf8(std::string("\xC0\x80")) == 0u);       // overlong
  }

  TEST_CASE("case helpers touch ASCII only") {
    CHECK(text::to_lower("WeTin") == "wetin");
    CHECK(text::to_lower("ÀB") == "Àb");
    CHECK(text::starts_upper("Come"));
    CHECK_FALSE(text::starts_upper("come"));
    CHECK(text::capitalize_first("kom") == "Kom");
    CHECK(text::capitalize_first("") == "");
  }

  TEST_CASE("letters") {
    CHECK(text::is_letter(U'a'));
    CHECK(text::is_letter(U'Z'));
    CHECK(text::is_letter(U'ɛ'));
    CHECK(text::is_letter(U'ọ'));
    CHECK_FALSE(text::is_letter(U'1'));
    CHECK_FALSE(text::is_letter(U'\''));
    CHECK_FALSE(text::is_letter(U'×'));
  }

  TEST_CASE("splitting and data lines") {
    CHECK(text::split("a\tb\t", '\t') == std::vector<std::string>{"a", "b", ""});
    CHECK(text::split_whitespace("  k  s ") == std::vector<std::string>{"k", "s"});
    CHECK(text::join({"a", "b"}, "-") == "a-b");
    const auto lines = text::data_lines_from("# c\n\nx\ty\r\n  # d\nz");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].number == 3);
    CHECK(lines[0].content == "x\ty");
    CHECK(lines[1].number == 5);
    CHECK_THROWS_AS(text::read_file("/nonexistent/file"), Error);
  }
}
