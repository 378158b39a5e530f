#include "surfalg/fixtures.hpp"

namespace surfalg {

namespace {

SideSpec a(const char* label, int dir) { return SideSpec::arc(label, dir); }
SideSpec s(const char* label) { return SideSpec::segment(label); }

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"fixtureA",
                 {{s("s1"), a("1", 1), a("2", 1)}, {s("s2"), a("1", -1), a("2", -1)}},
                 {{"zero", {}}}});
  out.push_back({"fixtureB",
                 {{a("3", 1), a("6", 1), a("2", 1)},
                  {a("4", 1), s("b3a"), a("3", -1)},
                  {a("5", 1), s("b3b"), a("4", -1)},
                  {a("2", -1), a("1", 1), s("b1")},
                  {a("6", -1), a("7", 1), s("b2")},
                  {a("1", -1), a("7", -1), a("5", -1)}},
                 {{"d0", {{"6>2#1", 1}, {"1>7#1", 1}}},
                  {"d1", {{"3>6#1", 1}, {"7>5#1", 1}}},
                  {"d2", {{"2>3#1", 1}, {"1>7#1", 1}}},
                  {"d3", {{"2>3#1", 1}, {"5>1#1", 1}}}}});
  out.push_back({"fixtureC",
                 {{a("1", 1), a("7", 1), a("5", 1)},
                  {a("3", 1), a("7", -1), a("6", 1)},
                  {a("3", -1), a("5", -1), a("4", 1)},
                  {a("4", -1), s("b3a"), s("b3b")},
                  {a("6", -1), a("2", 1), s("b1")},
                  {a("1", -1), a("2", -1), s("b2")}},
                 {{"d0", {{"3>7#1", 1}, {"3>5#1", 1}, {"1>7#1", 1}}},
                  {"d1", {{"4>3#1", 1}, {"3>7#1", 1}, {"7>5#1", 1}}}}});
  out.push_back({"fixtureD",
                 {{s("e0"), s("e1"), a("02", -1)},
                  {a("02", 1), s("e2"), a("03", -1)},
                  {a("03", 1), s("e3"), s("e4")}},
                 {}});
  return out;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

std::optional<Fixture> find_fixture(std::string_view name) {
  for (const Fixture& f : builtin_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

}  // namespace surfalg
