#include "eat/triple.hpp"

#include <algorithm>
#include <functional>

namespace eat {

namespace {

LatticeEffectAlgebra sharp_as_lattice(const EffectAlgebra& sharp) {
  try {
    return LatticeEffectAlgebra(sharp);
  } catch (const NotALattice& ex) {
    throw TripleInconsistency(std::string("sharp part is not a lattice: ") + ex.what());
  }
}

std::string pair_name(const Triple& t, TeaPair p) {
  return "(" + t.sharp.name(p.sharp) + "," + t.meager.name(p.meager) + ")";
}

std::vector<Element> invert(const std::vector<Element>& embedding, std::size_t host_size) {
  std::vector<Element> inverse(host_size, kUndefined);
  for (std::size_t i = 0; i < embedding.size(); ++i) inverse[embedding[i]] = static_cast<Element>(i);
  return inverse;
}

// Builds and validates the algebra on `pairs` whose sum is `sum`.
TeaAlgebra assemble(const Triple& t, std::vector<TeaPair> pairs,
                    const std::function<std::optional<TeaPair>(TeaPair, TeaPair)>& sum) {
  auto index = [&](TeaPair p) -> std::optional<Element> {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) return std::nullopt;
    return static_cast<Element>(it - pairs.begin());
  };
  const auto zero = index({t.sharp.zero(), t.meager.zero()});
  const auto unit = index({t.sharp.unit(), t.meager.zero()});
  if (!zero || !unit) throw InconsistencyError("(0,0) or (1,0) missing from the pair carrier");

  std::vector<std::string> names;
  for (TeaPair p : pairs) names.push_back(pair_name(t, p));
  SumTable table(std::move(names), *zero, *unit);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto z = sum(pairs[i], pairs[j]);
      if (!z) continue;
      const auto k = index(*z);
      if (!k) {
        throw InconsistencyError("pair sum " + pair_name(t, pairs[i]) + " + " + pair_name(t, pairs[j]) +
                                 " leaves the carrier");
      }
      table.set(static_cast<Element>(i), static_cast<Element>(j), *k);
    }
  }
  auto outcome = validate(std::move(table));
  if (!outcome.algebra) {
    std::string why = "pair construction is not an effect algebra";
    if (!outcome.report.structural.empty()) why += ": " + outcome.report.structural.front();
    if (!outcome.report.violations.empty()) why += ": " + outcome.report.violations.front().message;
    throw InconsistencyError(why);
  }
  return TeaAlgebra{std::move(*outcome.algebra), std::move(pairs)};
}

// Greatest element of `set` under `leq`, if one exists.
template <typename Leq>
std::optional<Element> top_of(const std::vector<Element>& set, Leq leq) {
  for (Element c : set) {
    if (std::all_of(set.begin(), set.end(), [&](Element z) { return leq(z, c); })) return c;
  }
  return std::nullopt;
}

}  // namespace

ExtractedTriple extract_triple(const LatticeEffectAlgebra& e) {
  const SharpSet sh = sharp_elements(e);
  SubAlgebra sharp = make_subalgebra(e.algebra(), sh.members);
  MeagerStructure mea = meager_elements(e, sh);

  std::vector<ElementSet> h;
  for (Element s : sharp.embedding) {
    ElementSet below(mea.partial.size());
    for (std::size_t m = 0; m < mea.embedding.size(); ++m) {
      if (e.leq(mea.embedding[m], s)) below.set(m);
    }
    h.push_back(std::move(below));
  }
  auto host_to_sharp = invert(sharp.embedding, e.size());
  auto host_to_meager = invert(mea.embedding, e.size());
  return ExtractedTriple{Triple{std::move(sharp.algebra), std::move(mea.partial), std::move(h)},
                         std::move(sharp.embedding), std::move(mea.embedding),
                         std::move(host_to_sharp), std::move(host_to_meager)};
}

TripleCalculus::TripleCalculus(const Triple& t) : t_(t), sharp_(sharp_as_lattice(t.sharp)) {
  const std::size_t ns = t_.sharp.size();
  const std::size_t nm = t_.meager.size();
  if (t_.h.size() != ns) throw TripleInconsistency("h must have one entry per sharp element");
  for (const auto& row : t_.h) {
    if (row.size() != nm) throw TripleInconsistency("h(s) must be a subset of the meager carrier");
  }
  for (Element x = 0; x < nm; ++x) hat_.push_back(compute_hat(x));
  pi_.resize(ns * nm);
  for (Element s = 0; s < ns; ++s) {
    for (Element x = 0; x < nm; ++x) pi_[s * nm + x] = compute_pi(s, x);
  }
  for (Element x = 0; x < nm; ++x) r_.push_back(compute_r(x));

  s_.assign(nm * nm, kUndefined);
  std::vector<Element> family;
  for (Element x = 0; x < nm; ++x) {
    for (Element y = 0; y < nm; ++y) {
      family.clear();
      for (Element z = 0; z < ns; ++z) {
        const Element px = map_pi(z, x);
        if (map_hat(px) == z && map_r(px) == map_pi(z, y)) family.push_back(z);
      }
      auto top = top_of(family, [&](Element a, Element b) { return sharp_.leq(a, b); });
      if (top) s_[x * nm + y] = *top;
    }
  }
}

Element TripleCalculus::compute_hat(Element x) const {
  std::vector<Element> above;
  for (Element s = 0; s < t_.sharp.size(); ++s) {
    if (in_h(s, x)) above.push_back(s);
  }
  for (Element c : above) {
    if (std::all_of(above.begin(), above.end(), [&](Element s) { return sharp_.leq(c, s); })) return c;
  }
  throw TripleInconsistency("no least sharp element over meager " + t_.meager.name(x));
}

Element TripleCalculus::compute_pi(Element s, Element x) const {
  const auto top = t_.meager.maximum(t_.meager.down(x) & t_.h[s]);
  if (!top) {
    throw TripleInconsistency("no greatest element of h(" + t_.sharp.name(s) + ") under " +
                              t_.meager.name(x));
  }
  return *top;
}

Element TripleCalculus::compute_r(Element x) const {
  const auto& m = t_.meager;
  if (x == m.zero()) return m.zero();
  ElementSet terms(m.size());
  for (Element a : m.atoms()) {
    if (!m.leq(a, x)) continue;
    std::size_t k = 0;
    while (true) {
      const auto next = m.multiple(a, k + 1);
      if (!next || !m.leq(*next, x)) break;
      ++k;
    }
    const std::size_t n_a = host_ord(a);
    const auto term = m.multiple(a, n_a - k);
    if (!term) throw TripleInconsistency("multiple of meager atom " + m.name(a) + " undefined");
    terms.set(*term);
  }
  const auto sup = m.supremum(terms);
  if (!sup) throw TripleInconsistency("no join of complementary atom multiples under " + m.name(x));
  return *sup;
}

std::optional<Element> TripleCalculus::map_s(Element x, Element y) const {
  const Element z = s_[x * t_.meager.size() + y];
  if (z == kUndefined) return std::nullopt;
  return z;
}

std::optional<Element> TeaAlgebra::index_of(TeaPair p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return std::nullopt;
  return static_cast<Element>(it - pairs.begin());
}

std::optional<TeaPair> tea_sum(const TripleCalculus& calc, TeaPair x, TeaPair y) {
  const auto& t = calc.triple();
  const auto s = calc.map_s(x.meager, y.meager);
  if (!s) return std::nullopt;
  auto zs = t.sharp.sum(x.sharp, y.sharp);
  if (zs) zs = t.sharp.sum(*zs, *s);
  if (!zs) return std::nullopt;
  const auto xr = t.meager.ominus(x.meager, calc.map_pi(*s, x.meager));
  const auto yr = t.meager.ominus(y.meager, calc.map_pi(*s, y.meager));
  if (!xr || !yr) throw TripleInconsistency("projection is not below its argument");
  const auto zm = t.meager.sum(*xr, *yr);
  if (!zm) return std::nullopt;
  if (!calc.in_h(t.sharp.complement(*zs), *zm)) return std::nullopt;
  return TeaPair{*zs, *zm};
}

TeaAlgebra build_tea(const Triple& t) {
  TripleCalculus calc(t);
  std::vector<TeaPair> pairs;
  for (Element s = 0; s < t.sharp.size(); ++s) {
    const ElementSet& allowed = t.h[t.sharp.complement(s)];
    for (Element m = 0; m < t.meager.size(); ++m) {
      if (allowed.test(m)) pairs.push_back({s, m});
    }
  }
  return assemble(t, std::move(pairs), [&](TeaPair a, TeaPair b) { return tea_sum(calc, a, b); });
}

TeaPair phi(const Decomposer& d, const ExtractedTriple& t, Element x) {
  const auto& e = d.lattice();
  const Element s = d.envelope(x).below;
  const Element m = *e.ominus(x, s);
  const TeaPair p{t.host_to_sharp[s], t.host_to_meager[m]};
  if (p.sharp == kUndefined || p.meager == kUndefined) {
    throw InconsistencyError("decomposition of " + e.name(x) + " leaves the triple");
  }
  return p;
}

TeaPair phi(const LatticeEffectAlgebra& e, const ExtractedTriple& t, Element x) {
  return phi(Decomposer(e), t, x);
}

IsoCertificate verify_iso(const EffectAlgebra& source, const std::vector<TeaPair>& images,
                          const TeaAlgebra& tea) {
  IsoCertificate cert;
  const auto n = static_cast<Element>(source.size());
  const auto& target = tea.algebra;
  if (images.size() != n) {
    cert.failure = "image table has the wrong length";
    return cert;
  }
  std::vector<bool> hit(target.size(), false);
  for (Element x = 0; x < n; ++x) {
    const auto i = tea.index_of(images[x]);
    if (!i) {
      cert.failure = "image of " + source.name(x) + " is not in the carrier";
      cert.offending = {{x, x}};
      return cert;
    }
    if (hit[*i]) {
      cert.failure = "two elements share the image " + target.name(*i);
      cert.offending = {{x, x}};
      return cert;
    }
    hit[*i] = true;
    cert.mapping.push_back(*i);
  }
  if (n != target.size()) {
    cert.failure = "map is not onto the carrier";
    return cert;
  }
  if (cert.mapping[source.zero()] != target.zero() || cert.mapping[source.unit()] != target.unit()) {
    cert.failure = "0 or 1 not preserved";
    return cert;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element lhs = source.sum_or_undefined(x, y);
      const Element rhs = target.sum_or_undefined(cert.mapping[x], cert.mapping[y]);
      const bool ok = lhs == kUndefined ? rhs == kUndefined : rhs == cert.mapping[lhs];
      if (!ok) {
        cert.failure = "sum of " + source.name(x) + " and " + source.name(y) + " not preserved";
        cert.offending = {{x, y}};
        return cert;
      }
    }
  }
  cert.isomorphic = true;
  return cert;
}

IsoCertificate verify_iso(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                          const TeaAlgebra& tea) {
  const Decomposer d(e);
  std::vector<TeaPair> images;
  for (Element x = 0; x < e.size(); ++x) images.push_back(phi(d, t, x));
  return verify_iso(e.algebra(), images, tea);
}

RestrictedTea build_tea_restricted(const LatticeEffectAlgebra& e) {
  const ElementSet b = compatibility_center(e);
  const ElementSet c = center(e).members;
  SubAlgebra sub = make_subalgebra(e.algebra(), b);
  const LatticeEffectAlgebra lb(sub.algebra);
  ExtractedTriple tb = extract_triple(lb);

  // Sh(B(E)) = C(E) and Mea(B(E)) = Mea(E) n B(E), in host coordinates.
  const ExtractedTriple te = extract_triple(e);
  ElementSet sharp_b(e.size()), meager_b(e.size()), meager_e(e.size());
  for (Element s : tb.sharp_to_host) sharp_b.set(sub.embedding[s]);
  for (Element m : tb.meager_to_host) meager_b.set(sub.embedding[m]);
  for (Element m : te.meager_to_host) meager_e.set(m);
  if (sharp_b != c) throw InconsistencyError("sharp part of B(E) differs from C(E)");
  if (meager_b != (meager_e & b)) throw InconsistencyError("meager part of B(E) differs from Mea(E) n B(E)");

  // Carrier and sum restricted from the full construction, then carried over
  // to the coordinates of B(E)'s own triple.
  const TripleCalculus ce(te.triple);
  const auto host_b = invert(sub.embedding, e.size());
  auto to_b = [&](TeaPair p) {
    const Element hs = te.sharp_to_host[p.sharp];
    const Element hm = te.meager_to_host[p.meager];
    return TeaPair{tb.host_to_sharp[host_b[hs]], tb.host_to_meager[host_b[hm]]};
  };
  auto to_e = [&](TeaPair p) {
    const Element hs = sub.embedding[tb.sharp_to_host[p.sharp]];
    const Element hm = sub.embedding[tb.meager_to_host[p.meager]];
    return TeaPair{te.host_to_sharp[hs], te.host_to_meager[hm]};
  };
  std::vector<TeaPair> pairs;
  for (Element s = 0; s < te.triple.sharp.size(); ++s) {
    if (!c.test(te.sharp_to_host[s])) continue;
    const ElementSet& allowed = te.triple.h[te.triple.sharp.complement(s)];
    for (Element m = 0; m < te.triple.meager.size(); ++m) {
      if (allowed.test(m) && b.test(te.meager_to_host[m])) pairs.push_back(to_b({s, m}));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  TeaAlgebra tea = assemble(tb.triple, std::move(pairs), [&](TeaPair x, TeaPair y) -> std::optional<TeaPair> {
    const auto z = tea_sum(ce, to_e(x), to_e(y));
    if (!z) return std::nullopt;
    if (!c.test(te.sharp_to_host[z->sharp]) || !b.test(te.meager_to_host[z->meager])) {
      throw InconsistencyError("restricted pair sum leaves C(E) x (Mea(E) n B(E))");
    }
    return to_b(*z);
  });

  // The restriction must coincide with the construction run on B(E)'s triple.
  if (build_tea(tb.triple).algebra.table() != tea.algebra.table()) {
    throw InconsistencyError("restricted construction differs from the one over B(E)'s triple");
  }
  IsoCertificate cert = verify_iso(lb, tb, tea);
  return RestrictedTea{std::move(sub), std::move(tb), std::move(tea), std::move(cert)};
}

std::vector<std::string> cross_check_maps(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                                          const TripleCalculus& calc) {
  std::vector<std::string> out;
  const Decomposer d(e);
  const auto& tr = t.triple;
  const auto nm = static_cast<Element>(tr.meager.size());
  const auto ns = static_cast<Element>(tr.sharp.size());
  auto host_s = [&](Element s) { return t.sharp_to_host[s]; };
  auto host_m = [&](Element m) { return t.meager_to_host[m]; };

  for (Element m = 0; m < nm; ++m) {
    const Element x = host_m(m);
    const Element hat = d.envelope(x).above;
    if (host_s(calc.map_hat(m)) != hat) out.push_back("hat(" + e.name(x) + ")");
    const auto r = e.ominus(hat, x);
    if (!r || host_m(calc.map_r(m)) != *r) out.push_back("R(" + e.name(x) + ")");
    for (Element s = 0; s < ns; ++s) {
      if (host_m(calc.map_pi(s, m)) != e.meet(x, host_s(s))) {
        out.push_back("pi_" + e.name(host_s(s)) + "(" + e.name(x) + ")");
      }
    }
  }
  std::vector<Element> family;
  for (Element mx = 0; mx < nm; ++mx) {
    for (Element my = 0; my < nm; ++my) {
      const Element x = host_m(mx), y = host_m(my);
      family.clear();
      for (Element z : t.sharp_to_host) {
        const auto sum = e.sum(e.meet(z, x), e.meet(z, y));
        if (sum && *sum == z) family.push_back(z);
      }
      const auto top = top_of(family, [&](Element a, Element b) { return e.leq(a, b); });
      const auto s = calc.map_s(mx, my);
      const bool ok = top ? (s && host_s(*s) == *top) : !s;
      if (!ok) out.push_back("S(" + e.name(x) + "," + e.name(y) + ")");
    }
  }
  return out;
}

std::vector<std::string> check_sum_existence(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                                               const TripleCalculus& calc) {
  std::vector<std::string> out;
  const auto& tr = t.triple;
  const auto nm = static_cast<Element>(tr.meager.size());
  for (Element mx = 0; mx < nm; ++mx) {
    for (Element my = 0; my < nm; ++my) {
      const Element x = t.meager_to_host[mx], y = t.meager_to_host[my];
      const auto host = e.sum(x, y);
      std::optional<Element> rebuilt;
      if (const auto s = calc.map_s(mx, my)) {
        const auto xr = tr.meager.ominus(mx, calc.map_pi(*s, mx));
        const auto yr = tr.meager.ominus(my, calc.map_pi(*s, my));
        const auto rem = xr && yr ? tr.meager.sum(*xr, *yr) : std::nullopt;
        if (rem && calc.in_h(tr.sharp.complement(*s), *rem)) {
          rebuilt = e.sum(t.sharp_to_host[*s], t.meager_to_host[*rem]);
          if (!rebuilt) out.push_back("S(" + e.name(x) + "," + e.name(y) + ") (+) remainder undefined");
        }
      }
      if (host.has_value() != rebuilt.has_value() || (host && *host != *rebuilt)) {
        out.push_back(e.name(x) + " (+) " + e.name(y));
      }
    }
  }
  return out;
}

}  // namespace eat
