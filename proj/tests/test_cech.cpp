#include <set>

#include "common.hpp"
#include "gloc/cech.hpp"
#include "gloc/morita.hpp"
#include "oracles.hpp"

using namespace t;

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every cover of {0..n-1} by up to k nonempty subsets (as bit masks).
std::vector<Cover> covers(int n, int k) {
  std::vector<std::string> base;
  for (int i = 0; i < n; ++i) base.push_back("p" + std::to_string(i));
  std::vector<Cover> out;
  const int full = (1 << n) - 1;
  std::vector<int> masks;
  std::function<void()> rec = [&] {
    int u = 0;
    for (int m : masks) u |= m;
    if (u == full && !masks.empty()) {
      std::vector<std::vector<Id>> subsets;
      for (int m : masks) {
        std::vector<Id> s;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) s.push_back(i);
        subsets.push_back(s);
      }
      out.push_back(subset_cover(base, subsets));
    }
    if (static_cast<int>(masks.size()) == k) return;
    for (int m = masks.empty() ? 1 : masks.back(); m <= full; ++m) {
      masks.push_back(m);
      rec();
      masks.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("nebulaic groupoids") {
  const Nebula one = nebulaic_groupoid(subset_cover({"a", "b"}, {{0, 1}}));
  CHECK(one.groupoid.num_objects() == 2);
  CHECK(one.groupoid.num_arrows() == 2);
  const Nebula two = nebulaic_groupoid(subset_cover({"a", "b"}, {{0, 1}, {1}}));
  CHECK(two.groupoid.num_objects() == 3);
  CHECK(two.groupoid.num_arrows() == 5);
  const Nebula dis = nebulaic_groupoid(subset_cover({"a", "b"}, {{0}, {1}}));
  CHECK(dis.groupoid.num_components() == 2);
  CHECK(dis.groupoid.num_arrows() == 2);
  CHECK_THROWS_AS(validate_cover(subset_cover({"a", "b"}, {{0}})), Error);
}

TEST_CASE("evaluation is a subductive weak equivalence and covers are Morita equivalent") {
  const auto cs = covers(3, 2);
  for (const auto& c : cs) CHECK(check_subductive_weak_equivalence(nebulaic_groupoid(c).ev));
  for (std::size_t i = 1; i < cs.size(); i += 7)
    CHECK(are_morita_equivalent(nebulaic_groupoid(cs[0]).groupoid, nebulaic_groupoid(cs[i]).groupoid).equivalent);
}

TEST_CASE("cocycle categories") {
  const Group c2 = cyclic_group(2);
  const CocycleCategory one = cocycle_category(subset_cover({"a", "b"}, {{0, 1}}), c2);
  CHECK(one.cocycles.size() == 1);
  CHECK(one.homs(one.cocycles[0], one.cocycles[0]).size() == 4);

  const CocycleCategory two = cocycle_category(subset_cover({"a", "b"}, {{0, 1}, {1}}), c2);
  const Cocycle triv(two.nebula.groupoid.num_arrows(), c2.e);
  for (const auto& f : two.cocycles) CHECK_FALSE(two.homs(triv, f).empty());

  const CocycleCategory t = cocycle_category(subset_cover({"a"}, {{0}}), cyclic_group(1));
  CHECK(t.cocycles.size() == 1);
  CHECK(t.homs(t.cocycles[0], t.cocycles[0]).size() == 1);

  CHECK_THROWS_AS(cocycle_category(subset_cover({"a"}, {{0}}), symmetric_group3()), Error);
}

TEST_CASE("cocycles and hom-sets agree with brute-force enumeration") {
  for (int gi : {2, 3}) {
    const Group g = cyclic_group(gi);
    const std::size_t arrow_cap = gi == 2 ? 12 : 8;
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : covers(n, 3)) {
        const CocycleCategory cc = cocycle_category(c, g);
        const Groupoid& N = cc.nebula.groupoid;
        if (N.num_arrows() > arrow_cap) continue;
        const auto brute = oracle::cocycles(N, g);
        CHECK(std::set<Cocycle>(brute.begin(), brute.end()) ==
              std::set<Cocycle>(cc.cocycles.begin(), cc.cocycles.end()));
        for (std::size_t i = 0; i < cc.cocycles.size() && i < 4; ++i)
          CHECK(cc.homs(cc.cocycles[0], cc.cocycles[i]).size() ==
                oracle::cocycle_homs(N, g, cc.cocycles[0], cc.cocycles[i]));
      }
  }
}

TEST_CASE("bundle categories") {
  const Group c2 = cyclic_group(2);
  const BundleCategory one = bundle_category({"a"}, c2);
  CHECK(one.count_homs(0, 0) == 2);
  const BundleCategory two = bundle_category({"a", "b"}, c2);
  for (std::size_t i = 0; i < two.bundles.size(); ++i)
    for (std::size_t j = 0; j < two.bundles.size(); ++j) CHECK(two.count_homs(i, j) == 4);
  const BundleCategory t = bundle_category({"a"}, cyclic_group(1));
  CHECK(t.bundles.size() == 1);
  CHECK(t.count_homs(0, 0) == 1);
}

TEST_CASE("cocycles classify bundles") {
  for (int gi : {1, 2, 3}) {
    const Group g = cyclic_group(gi);
    for (int n = 1; n <= 2; ++n)
      for (const auto& c : covers(n, 3)) {
        const CechReport r = cech_equivalence_check(c, g);
        CHECK(r.ok());
        CHECK(r.cocycle_classes == 1);
        CHECK(r.bundle_classes == 1);
        CHECK(r.cocycle_aut == power(gi, n));
        CHECK(r.bundle_aut == power(gi, n));
      }
  }
  const CechReport r3 = cech_equivalence_check(subset_cover({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), cyclic_group(3));
  CHECK(r3.ok());
  CHECK(r3.cocycle_aut == 27);
}
