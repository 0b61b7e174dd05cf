#include "groupmin/examples.hpp"

#include "groupmin/perm.hpp"

namespace groupmin::examples {

namespace {

Transformation t(const std::string& cycles, std::size_t degree) {
  return parse_cycles(cycles, degree);
}

}  // namespace

Dfa altdfa() {
  return Dfa(4, {"a", "b"}, {t("(2,3,4)", 4), t("(1,2)(3,4)", 4)}, 0, {2, 3});
}

Dfa cycdfa() {
  return Dfa(6, {"a"}, {t("(1,2,3,4,5,6)", 6)}, 0, {0, 2, 4});
}

std::pair<Dfa, Dfa> symdiff2_pair() {
  Dfa a(2, {"a", "b", "c"}, {t("(1,2)", 2), t("(1,2)", 2), t("()", 2)}, 0, {0});
  Dfa ap(2, {"a", "b", "c"}, {t("(1,2)", 2), t("()", 2), t("(1,2)", 2)}, 0,
         {0});
  return {std::move(a), std::move(ap)};
}

std::pair<Dfa, Dfa> ubm_pair() {
  Dfa a(2, {"a", "b"}, {t("(1,2)", 2), t("()", 2)}, 0, {0});
  Dfa ap(3, {"a", "b"}, {t("(1,2)", 3), t("(1,2,3)", 3)}, 0, {0});
  return {std::move(a), std::move(ap)};
}

std::pair<Dfa, Dfa> similar_intransitive_pair() {
  Dfa a(5, {"a", "b"}, {t("(3,4)", 5), t("(1,2,3)(4,5)", 5)}, 0, {0});
  Dfa ap(10, {"a", "b"},
         {t("(1,2)(6,8)(7,9)", 10), t("(2,6,4,5,3,7)(8,10,9)", 10)}, 0, {0});
  return {std::move(a), std::move(ap)};
}

std::pair<Dfa, Dfa> dissimilar_swapped_pair() {
  Dfa a(5, {"a", "b"}, {t("(3,4)", 5), t("(1,2,3)(4,5)", 5)}, 0, {0});
  Dfa ap(10, {"a", "b"},
         {t("(2,6,4,5,3,7)(8,10,9)", 10), t("(1,2)(6,8)(7,9)", 10)}, 0, {0});
  return {std::move(a), std::move(ap)};
}

std::pair<Dfa, Dfa> similar_s5_s6_pair() {
  Dfa a(5, {"a", "b"}, {t("(3,4)", 5), t("(1,2,3)(4,5)", 5)}, 0, {0});
  Dfa ap(6, {"a", "b"}, {t("(1,2)(3,4)(5,6)", 6), t("(1,2,3,4,5,6)", 6)}, 0,
         {0});
  return {std::move(a), std::move(ap)};
}

std::pair<Dfa, Dfa> similar_s5_s6_pair_gap_variant() {
  Dfa a(5, {"a", "b"}, {t("(3,4)", 5), t("(1,2,3)(4,5)", 5)}, 0, {0});
  Dfa ap(6, {"a", "b"}, {t("(1,2)(3,4)(5,6)", 6), t("(1,2,3,5,4,6)", 6)}, 0,
         {0});
  return {std::move(a), std::move(ap)};
}

}  // namespace groupmin::examples
