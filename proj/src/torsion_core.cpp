#include "torsion/torsion_core.hpp"

#include <set>
#include <stdexcept>

namespace torsion {

ObjectSet perp_right(const Category& cat, ObjectSet d, ObjectSet ambient) {
  ObjectSet out;
  for (ObjectId y : ambient) {
    bool zero = true;
    for (ObjectId x : d) {
      if (cat.hom(x, y) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.insert(y);
  }
  return out;
}

ObjectSet perp_left(const Category& cat, ObjectSet d, ObjectSet ambient) {
  ObjectSet out;
  for (ObjectId x : ambient) {
    bool zero = true;
    for (ObjectId y : d) {
      if (cat.hom(x, y) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.insert(x);
  }
  return out;
}

ObjectSet gen_closure(const Category& cat, ObjectSet s) {
  ObjectSet out;
  for (ObjectId x : s) {
    for (int len = 1; len <= cat.length(x); ++len) out.insert(*cat.quotient(x, len));
  }
  return out;
}

ObjectSet cogen_closure(const Category& cat, ObjectSet s) {
  ObjectSet out;
  for (ObjectId x : s) {
    for (int len = 1; len <= cat.length(x); ++len) out.insert(*cat.submodule(x, len));
  }
  return out;
}

ObjectSet extension_closure(const Category& cat, ObjectSet s) {
  ObjectSet out = s;
  bool grew = true;
  while (grew) {
    grew = false;
    const ObjectSet snapshot = out;
    for (ObjectId x : snapshot) {
      for (ObjectId y : snapshot) {
        if (auto e = cat.glue(x, y); e && !out.contains(*e)) {
          out.insert(*e);
          grew = true;
        }
      }
    }
  }
  return out;
}

ObjectSet extension_closure(const Category& cat, const std::vector<ObjectSet>& parts) {
  ObjectSet u;
  for (ObjectSet p : parts) u |= p;
  return extension_closure(cat, u);
}

bool is_extension_closed(const Category& cat, ObjectSet s) {
  for (ObjectId x : s) {
    for (ObjectId y : s) {
      if (auto e = cat.glue(x, y); e && !s.contains(*e)) return false;
    }
  }
  return true;
}

bool is_quotient_closed(const Category& cat, ObjectSet s) { return gen_closure(cat, s) == s; }

bool is_submodule_closed(const Category& cat, ObjectSet s) { return cogen_closure(cat, s) == s; }

Check is_torsion_pair(const Category& cat, ObjectSet ambient, const TorsionPair& tp) {
  for (ObjectId x : tp.torsion - ambient) return Check::fail("torsion class leaves the ambient", x);
  for (ObjectId y : tp.free - ambient) return Check::fail("torsion-free class leaves the ambient", y);
  for (ObjectId x : tp.torsion) {
    for (ObjectId y : tp.free) {
      if (cat.hom(x, y) != 0) return Check::fail("Hom(T, F) is nonzero", y, x);
    }
  }
  for (ObjectId x : ambient) {
    const int len = cat.length(x);
    bool found = false;
    for (int p = 0; p <= len && !found; ++p) {
      auto sub = cat.submodule(x, p);
      auto quo = cat.subquotient(x, p, len);
      found = (!sub || tp.torsion.contains(*sub)) && (!quo || tp.free.contains(*quo));
    }
    if (!found) return Check::fail("no short exact sequence 0 -> T -> X -> F -> 0", x);
  }
  return Check::pass();
}

std::optional<ObjectId> torsion_submodule(const Category& cat, ObjectSet torsion, ObjectId x) {
  for (int p = cat.length(x); p > 0; --p) {
    auto sub = cat.submodule(x, p);
    if (torsion.contains(*sub)) return sub;
  }
  return std::nullopt;
}

Check is_series(const Category& cat, ObjectSet ambient, const TorsionPairSeries& s) {
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    Check c = is_torsion_pair(cat, ambient, s.pairs[i]);
    if (!c) {
      c.reason = "pair " + std::to_string(i + 1) + ": " + c.reason;
      return c;
    }
    if (i > 0 && !s.pairs[i - 1].torsion.subset_of(s.pairs[i].torsion)) {
      return Check::fail("torsion classes are not increasing at pair " + std::to_string(i + 1));
    }
  }
  return Check::pass();
}

NTorsionPair series_to_ntp(const Category& cat, ObjectSet ambient, const TorsionPairSeries& s) {
  if (s.pairs.empty()) throw std::invalid_argument("empty torsion pair series");
  if (Check c = is_series(cat, ambient, s); !c) throw std::invalid_argument(c.reason);
  NTorsionPair t;
  t.parts.push_back(s.pairs.front().torsion);
  for (std::size_t i = 1; i < s.pairs.size(); ++i) {
    t.parts.push_back(s.pairs[i - 1].free & s.pairs[i].torsion);
  }
  t.parts.push_back(s.pairs.back().free);
  return t;
}

TorsionPairSeries ntp_to_series(const Category& cat, ObjectSet ambient, const NTorsionPair& t) {
  if (t.parts.size() < 2) throw std::invalid_argument("need at least two parts");
  if (Check c = is_ntp(cat, ambient, t); !c) throw std::invalid_argument(c.reason);
  TorsionPairSeries s;
  for (std::size_t i = 1; i < t.parts.size(); ++i) {
    std::vector<ObjectSet> head(t.parts.begin(), t.parts.begin() + i);
    std::vector<ObjectSet> tail(t.parts.begin() + i, t.parts.end());
    s.pairs.push_back({extension_closure(cat, head), extension_closure(cat, tail)});
  }
  return s;
}

std::optional<Filtration> find_filtration(const Category& cat, const std::vector<ObjectSet>& parts,
                                          ObjectId x) {
  const int len = cat.length(x);
  const std::size_t k = parts.size();
  // prev[i][p]: length of X_{i-1} on some chain reaching X_i of length p.
  std::vector<std::vector<int>> prev(k + 1, std::vector<int>(len + 1, -1));
  prev[0][0] = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    for (int p = 0; p <= len; ++p) {
      if (prev[i - 1][p] < 0) continue;
      for (int q = p; q <= len; ++q) {
        if (prev[i][q] >= 0) continue;
        auto f = cat.subquotient(x, p, q);
        if (!f || parts[i - 1].contains(*f)) prev[i][q] = p;
      }
    }
  }
  if (k == 0 || prev[k][len] < 0) return std::nullopt;
  Filtration f;
  f.lengths.assign(k + 1, 0);
  f.lengths[k] = len;
  for (std::size_t i = k; i > 0; --i) f.lengths[i - 1] = prev[i][f.lengths[i]];
  for (std::size_t i = 0; i <= k; ++i) f.chain.push_back(cat.submodule(x, f.lengths[i]));
  for (std::size_t i = 1; i <= k; ++i) {
    f.factors.push_back(cat.subquotient(x, f.lengths[i - 1], f.lengths[i]));
  }
  return f;
}

Filtration filtration(const Category& cat, const NTorsionPair& t, ObjectId x) {
  auto f = find_filtration(cat, t.parts, x);
  if (!f) throw std::invalid_argument("no filtration of " + cat.label(x) + " through the parts");
  return *f;
}

Check is_ntp(const Category& cat, ObjectSet ambient, const NTorsionPair& t) {
  if (t.parts.empty()) return Check::fail("no parts");
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    for (ObjectId x : t.parts[i] - ambient) {
      return Check::fail("part " + std::to_string(i + 1) + " leaves the ambient", x);
    }
  }
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < t.parts.size(); ++j) {
      for (ObjectId x : t.parts[i]) {
        for (ObjectId y : t.parts[j]) {
          if (cat.hom(x, y) != 0) {
            return Check::fail("Hom(C_" + std::to_string(i + 1) + ", C_" + std::to_string(j + 1) +
                                   ") is nonzero",
                               y, x);
          }
        }
      }
    }
  }
  for (ObjectId x : ambient) {
    if (!find_filtration(cat, t.parts, x)) return Check::fail("object has no filtration", x);
  }
  return Check::pass();
}

Check is_ntp_by_definition(const Category& cat, ObjectSet ambient, const NTorsionPair& t) {
  const std::size_t k = t.parts.size();
  if (k == 0) return Check::fail("no parts");
  for (std::size_t i = 0; i < k; ++i) {
    if (!t.parts[i].subset_of(ambient)) {
      return Check::fail("part " + std::to_string(i + 1) + " leaves the ambient");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ObjectSet> head(t.parts.begin(), t.parts.begin() + i);
    std::vector<ObjectSet> tail(t.parts.begin() + i + 1, t.parts.end());
    const ObjectSet expected = perp_right(cat, extension_closure(cat, head), ambient) &
                               perp_left(cat, extension_closure(cat, tail), ambient);
    if (expected != t.parts[i]) {
      const ObjectSet diff = (expected - t.parts[i]) | (t.parts[i] - expected);
      return Check::fail("part " + std::to_string(i + 1) + " is not the perpendicular intersection",
                         *diff.begin());
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<ObjectSet> head(t.parts.begin(), t.parts.begin() + i);
    std::vector<ObjectSet> tail(t.parts.begin() + i, t.parts.end());
    Check c = is_torsion_pair(cat, ambient,
                              {extension_closure(cat, head), extension_closure(cat, tail)});
    if (!c) {
      c.reason = "cut " + std::to_string(i) + ": " + c.reason;
      return c;
    }
  }
  return Check::pass();
}

std::pair<ObjectSet, ObjectSet> decompose_along(const Category& cat, const TorsionPair& tp,
                                                ObjectSet d) {
  ObjectSet d1, d2;
  for (ObjectId m : d) {
    auto t = torsion_submodule(cat, tp.torsion, m);
    const int p = t ? cat.length(*t) : 0;
    auto f = cat.subquotient(m, p, cat.length(m));
    if (f && !tp.free.contains(*f)) {
      throw std::invalid_argument("not a torsion pair: " + cat.label(m) +
                                  " has no canonical sequence");
    }
    if (t) d1.insert(*t);
    if (f) d2.insert(*f);
  }
  return {d1, d2};
}

NTorsionPair refine(const Category& cat, ObjectSet ambient, const NTorsionPair& t, std::size_t i,
                    const NTorsionPair& sub) {
  if (i >= t.parts.size()) throw std::out_of_range("refine: part index out of range");
  if (Check c = is_ntp(cat, ambient, t); !c) throw std::invalid_argument("refine: " + c.reason);
  if (Check c = is_ntp(cat, t.parts[i], sub); !c) {
    throw std::invalid_argument("refine: not an n-torsion pair on the part: " + c.reason);
  }
  NTorsionPair out;
  out.parts.assign(t.parts.begin(), t.parts.begin() + i);
  out.parts.insert(out.parts.end(), sub.parts.begin(), sub.parts.end());
  out.parts.insert(out.parts.end(), t.parts.begin() + i + 1, t.parts.end());
  return out;
}

NTorsionPair merge_parts(const Category& cat, ObjectSet ambient, const NTorsionPair& t,
                         std::size_t i, std::size_t k) {
  if (i + k >= t.parts.size()) throw std::out_of_range("merge_parts: range out of bounds");
  if (Check c = is_ntp(cat, ambient, t); !c) throw std::invalid_argument("merge_parts: " + c.reason);
  NTorsionPair out;
  out.parts.assign(t.parts.begin(), t.parts.begin() + i);
  std::vector<ObjectSet> block(t.parts.begin() + i, t.parts.begin() + i + k + 1);
  out.parts.push_back(extension_closure(cat, block));
  out.parts.insert(out.parts.end(), t.parts.begin() + i + k + 1, t.parts.end());
  return out;
}

Check is_defect_ntp(const Category& cat, ObjectSet ambient, const std::vector<ObjectSet>& parts) {
  const std::size_t k = parts.size();
  if (k == 0) return Check::fail("no parts");
  for (std::size_t i = 0; i < k; ++i) {
    if (!parts[i].subset_of(ambient)) {
      return Check::fail("part " + std::to_string(i + 1) + " leaves the ambient");
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<ObjectSet> head(parts.begin(), parts.begin() + i);
    std::vector<ObjectSet> tail(parts.begin() + i, parts.end());
    Check c = is_torsion_pair(cat, ambient,
                              {extension_closure(cat, head), extension_closure(cat, tail)});
    if (!c) {
      c.reason = "cut " + std::to_string(i) + ": " + c.reason;
      return c;
    }
  }
  return Check::pass();
}

NTorsionPair complete_defect(const Category& cat, ObjectSet ambient,
                             const std::vector<ObjectSet>& parts) {
  if (Check c = is_defect_ntp(cat, ambient, parts); !c) {
    throw std::invalid_argument("complete_defect: " + c.reason);
  }
  const std::size_t k = parts.size();
  NTorsionPair out;
  for (std::size_t i = 0; i < k; ++i) {
    // C_i = F_{i-1} cap T_i, where (T_j, F_j) is the j-th cut.
    std::vector<ObjectSet> prev_tail(parts.begin() + i, parts.end());
    std::vector<ObjectSet> head(parts.begin(), parts.begin() + i + 1);
    const ObjectSet f_prev = i == 0 ? ambient : extension_closure(cat, prev_tail);
    const ObjectSet t_here = i + 1 == k ? ambient : extension_closure(cat, head);
    out.parts.push_back(f_prev & t_here);
  }
  return out;
}

TorsionPair interval_bijection_F(const Category& cat, ObjectSet ambient,
                                 const TorsionPairSeries& outer, const TorsionPair& inner) {
  if (outer.pairs.size() != 2) throw std::invalid_argument("need a series of two torsion pairs");
  if (Check c = is_series(cat, ambient, outer); !c) throw std::invalid_argument(c.reason);
  const auto& [t1, f1] = outer.pairs[0];
  const auto& [t2, f2] = outer.pairs[1];
  if (Check c = is_torsion_pair(cat, f1 & t2, inner); !c) {
    throw std::invalid_argument("inner pair is not a torsion pair on F_1 cap T_2: " + c.reason);
  }
  return {extension_closure(cat, t1 | inner.torsion), extension_closure(cat, inner.free | f2)};
}

TorsionPair interval_bijection_G(const Category& cat, ObjectSet ambient,
                                 const TorsionPairSeries& outer, const TorsionPair& middle) {
  if (outer.pairs.size() != 2) throw std::invalid_argument("need a series of two torsion pairs");
  if (Check c = is_series(cat, ambient, outer); !c) throw std::invalid_argument(c.reason);
  if (Check c = is_torsion_pair(cat, ambient, middle); !c) throw std::invalid_argument(c.reason);
  const auto& [t1, f1] = outer.pairs[0];
  const auto& [t2, f2] = outer.pairs[1];
  if (!t1.subset_of(middle.torsion) || !middle.torsion.subset_of(t2)) {
    throw std::invalid_argument("torsion class not between T_1 and T_2");
  }
  return {middle.torsion & f1, middle.free & t2};
}

ObjectSet ext_projectives_in(const Category& cat, ObjectSet c, ObjectSet ambient) {
  ObjectSet out;
  for (ObjectId x : c) {
    bool ok = true;
    for (ObjectId y : ambient) ok = ok && cat.ext(x, y) == 0;
    if (ok) out.insert(x);
  }
  return out;
}

ObjectSet ext_injectives_in(const Category& cat, ObjectSet c, ObjectSet ambient) {
  ObjectSet out;
  for (ObjectId x : c) {
    bool ok = true;
    for (ObjectId y : ambient) ok = ok && cat.ext(y, x) == 0;
    if (ok) out.insert(x);
  }
  return out;
}

namespace {

Correspondence correspondence(const Category& cat, ObjectSet ambient, const NTorsionPair& t,
                              ObjectSet sources, bool projective_side) {
  if (Check c = is_ntp(cat, ambient, t); !c) throw std::invalid_argument(c.reason);
  Correspondence out;
  const std::size_t k = t.parts.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ObjectSet> span = projective_side
                                      ? std::vector<ObjectSet>(t.parts.begin() + i, t.parts.end())
                                      : std::vector<ObjectSet>(t.parts.begin(), t.parts.begin() + i + 1);
    const ObjectSet closure = extension_closure(cat, span);
    const ObjectSet targets = projective_side ? ext_projectives_in(cat, t.parts[i], closure)
                                              : ext_injectives_in(cat, t.parts[i], closure);
    for (ObjectId x : targets) out.expected.emplace_back(i, x);
  }
  std::set<std::pair<std::size_t, ObjectId>> hit;
  bool inside = true;
  for (ObjectId p : sources) {
    const Filtration f = filtration(cat, t, p);
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (f.factors[i] && (projective_side || !idx)) idx = i;
    }
    const ObjectId target = *f.factors[*idx];
    out.entries.push_back({p, *idx, target});
    hit.emplace(*idx, target);
    const std::set<std::pair<std::size_t, ObjectId>> expected(out.expected.begin(),
                                                              out.expected.end());
    inside = inside && expected.count({*idx, target}) != 0;
  }
  out.bijective = inside && hit.size() == out.entries.size() && hit.size() == out.expected.size();
  return out;
}

}  // namespace

Correspondence projective_correspondence(const Category& cat, ObjectSet ambient,
                                         const NTorsionPair& t, ObjectSet projectives) {
  return correspondence(cat, ambient, t, projectives, true);
}

Correspondence injective_correspondence(const Category& cat, ObjectSet ambient,
                                        const NTorsionPair& t, ObjectSet injectives) {
  return correspondence(cat, ambient, t, injectives, false);
}

}  // namespace torsion
