#include "gammalab/maps.hpp"

#include "gammalab/error.hpp"

namespace gammalab {

PointMap::PointMap(const SemiCalculus& dom, const SemiCalculus& cod, std::span<const int> images)
    : dom_(&dom), cod_(&cod) {
  const int n = dom.points();
  const int m = cod.points();
  if (static_cast<int>(images.size()) != n) {
    throw Error(ErrorCode::PointOutOfRange, "map table has " + std::to_string(images.size()) +
                                                " entries for a " + std::to_string(n) + "-point domain");
  }
  Subset hit;
  injective_ = true;
  for (int x = 0; x < n; ++x) {
    const int y = images[x];
    if (y < 0 || y >= m) {
      throw Error(ErrorCode::PointOutOfRange,
                  "map sends " + std::to_string(x) + " to " + std::to_string(y) +
                      ", outside the " + std::to_string(m) + "-point codomain");
    }
    if (hit.contains(y)) injective_ = false;
    hit = hit.with(y);
    f_[x] = y;
  }
  surjective_ = hit == cod.whole();
  for_each_subset(n, [&](Subset a) {
    Subset img;
    for (int x : a.points()) img = img.with(f_[x]);
    image_[a.index()] = img;
  });
  for_each_subset(m, [&](Subset b) {
    Subset pre;
    for (int x = 0; x < n; ++x) {
      if (b.contains(f_[x])) pre = pre.with(x);
    }
    preimage_[b.index()] = pre;
  });
}

std::vector<int> PointMap::table() const {
  return std::vector<int>(f_.begin(), f_.begin() + dom_->points());
}

namespace {

MapVerdict fail(Subset witness, ClosedDef def, int point = -1) {
  return MapVerdict{false, witness, point, def};
}

}  // namespace

MapVerdict is_gamma_semi_continuous(const PointMap& m) {
  const ClosedDef def = m.dom().closed_def();
  MapVerdict out{true, {}, -1, def};
  m.cod().gamma_open().for_each([&](Subset b) {
    if (out.holds && !m.dom().semi_open().contains(m.preimage(b))) out = fail(b, def);
  });
  return out;
}

MapVerdict is_gamma_semi_open_map(const PointMap& m) {
  const ClosedDef def = m.dom().closed_def();
  MapVerdict out{true, {}, -1, def};
  m.dom().gamma_open().for_each([&](Subset u) {
    if (out.holds && !m.cod().semi_open().contains(m.image(u))) out = fail(u, def);
  });
  return out;
}

MapVerdict is_gamma_semi_closed_map(const PointMap& m) {
  const ClosedDef def = m.dom().closed_def();
  MapVerdict out{true, {}, -1, def};
  m.dom().gamma_closed().for_each([&](Subset f) {
    if (out.holds && !m.cod().semi_closed().contains(m.image(f))) out = fail(f, def);
  });
  return out;
}

MapVerdict is_gb_continuous(const PointMap& m, ContinuityMode mode) {
  const ClosedDef def = m.dom().closed_def();
  if (mode == ContinuityMode::Preimage) {
    MapVerdict out{true, {}, -1, def};
    m.cod().gamma_open().for_each([&](Subset v) {
      if (out.holds && !m.dom().gamma_open().contains(m.preimage(v))) out = fail(v, def);
    });
    return out;
  }
  const Operation& gamma = m.dom().op();
  const Operation& beta = m.cod().op();
  const auto& dom_opens = gamma.space().opens();
  const auto& cod_opens = beta.space().opens();
  for (int x = 0; x < m.dom().points(); ++x) {
    for (std::size_t j = 0; j < cod_opens.size(); ++j) {
      if (!cod_opens[j].contains(m(x))) continue;
      const Subset target = beta.at(j);
      bool found = false;
      for (std::size_t i = 0; i < dom_opens.size() && !found; ++i) {
        found = dom_opens[i].contains(x) && m.image(gamma.at(i)).subset_of(target);
      }
      if (!found) return fail(cod_opens[j], def, x);
    }
  }
  return MapVerdict{true, {}, -1, def};
}

MapVerdict is_gb_open_map(const PointMap& m) {
  const ClosedDef def = m.dom().closed_def();
  MapVerdict out{true, {}, -1, def};
  m.dom().gamma_open().for_each([&](Subset a) {
    if (out.holds && !m.cod().gamma_open().contains(m.image(a))) out = fail(a, def);
  });
  return out;
}

MapVerdict is_gb_closed_map(const PointMap& m) {
  const ClosedDef def = m.dom().closed_def();
  MapVerdict out{true, {}, -1, def};
  m.dom().gamma_closed().for_each([&](Subset a) {
    if (out.holds && !m.cod().gamma_closed().contains(m.image(a))) out = fail(a, def);
  });
  return out;
}

std::vector<std::vector<int>> all_functions(int from, int to) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(from, 0);
  while (true) {
    out.push_back(f);
    int i = from - 1;
    while (i >= 0 && f[i] == to - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

}  // namespace gammalab
