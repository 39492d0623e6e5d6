#include "eat/gen.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>

namespace eat {

namespace {

constexpr std::size_t kMaxGeneratedSize = 512;
constexpr std::string_view kAtomLetters = "pqrstuvwxy";

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GenSpec parse() {
    GenSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) throw GenSpecError("unexpected trailing input", pos_);
    return spec;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw GenSpecError(std::string("expected '") + c + "'", pos_);
  }

  std::size_t number() {
    skip_space();
    std::size_t value = 0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == begin) throw GenSpecError("expected a positive integer", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  GenSpec parse_spec() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    GenSpec spec;
    if (word == "chain" || word == "boolean" || word == "mo") {
      spec.kind = word == "chain" ? GenSpec::Kind::kChain
                  : word == "boolean" ? GenSpec::Kind::kBoolean
                                      : GenSpec::Kind::kMo;
      expect(':');
      const std::size_t at = pos_;
      spec.n = number();
      if (spec.kind == GenSpec::Kind::kChain && spec.n < 2) throw GenSpecError("chain needs at least 2 elements", at);
      if (spec.kind == GenSpec::Kind::kBoolean && (spec.n < 1 || spec.n > kAtomLetters.size())) {
        throw GenSpecError("boolean needs 1 to " + std::to_string(kAtomLetters.size()) + " atoms", at);
      }
      if (spec.kind == GenSpec::Kind::kMo && spec.n < 1) throw GenSpecError("mo needs at least 1 block", at);
      return spec;
    }
    if (word == "product" || word == "hsum") {
      spec.kind = word == "product" ? GenSpec::Kind::kProduct : GenSpec::Kind::kHsum;
      expect('(');
      spec.parts.push_back(parse_spec());
      while (accept(',')) spec.parts.push_back(parse_spec());
      expect(')');
      if (spec.parts.size() < 2) throw GenSpecError(std::string(word) + " needs at least 2 arguments", start);
      return spec;
    }
    throw GenSpecError(word.empty() ? "expected a constructor name" : "unknown constructor '" + std::string(word) + "'",
                       start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t predicted_size(const GenSpec& spec) {
  auto clamp = [](std::size_t v) { return std::min(v, kMaxGeneratedSize + 1); };
  switch (spec.kind) {
    case GenSpec::Kind::kChain:
      return clamp(spec.n);
    case GenSpec::Kind::kBoolean:
      return clamp(std::size_t{1} << spec.n);
    case GenSpec::Kind::kMo:
      return clamp(2 * spec.n + 2);
    case GenSpec::Kind::kProduct: {
      std::size_t size = 1;
      for (const auto& p : spec.parts) size = clamp(size * predicted_size(p));
      return size;
    }
    case GenSpec::Kind::kHsum: {
      std::size_t size = 2;
      for (const auto& p : spec.parts) size = clamp(size + predicted_size(p) - 2);
      return size;
    }
  }
  return 0;
}

}  // namespace

GenSpecError::GenSpecError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position + 1)), position_(position) {}

GenSpec parse_gen_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::kChain:
      return "chain:" + std::to_string(spec.n);
    case GenSpec::Kind::kBoolean:
      return "boolean:" + std::to_string(spec.n);
    case GenSpec::Kind::kMo:
      return "mo:" + std::to_string(spec.n);
    case GenSpec::Kind::kProduct:
    case GenSpec::Kind::kHsum: {
      std::string out = spec.kind == GenSpec::Kind::kProduct ? "product(" : "hsum(";
      for (std::size_t i = 0; i < spec.parts.size(); ++i) out += (i ? "," : "") + to_string(spec.parts[i]);
      return out + ")";
    }
  }
  return {};
}

EffectAlgebra chain(std::size_t n) {
  if (n < 2) throw std::invalid_argument("chain needs at least 2 elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "0" : i == n - 1 ? "1" : i == 1 ? "a" : std::to_string(i) + "a");
  }
  SumTable t(std::move(names), 0, static_cast<Element>(n - 1));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; i + j < n; ++j) t.set(i, j, i + j);
  }
  return EffectAlgebra::from_table(std::move(t));
}

EffectAlgebra boolean(std::size_t k) {
  if (k < 1 || k > kAtomLetters.size()) throw std::invalid_argument("boolean: unsupported atom count");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      names.push_back("0");
    } else if (mask == n - 1) {
      names.push_back("1");
    } else {
      std::string name;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) name += kAtomLetters[i];
      }
      names.push_back(name);
    }
  }
  SumTable t(std::move(names), 0, static_cast<Element>(n - 1));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if ((x & y) == 0) t.set(x, y, x | y);
    }
  }
  return EffectAlgebra::from_table(std::move(t));
}

EffectAlgebra mo(std::size_t n) {
  if (n < 1) throw std::invalid_argument("mo needs at least 1 block");
  if (n == 1) return boolean(2);
  return horizontal_sum(std::vector<EffectAlgebra>(n, boolean(2)));
}

EffectAlgebra product(const std::vector<EffectAlgebra>& factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.size();
  // Mixed-radix digits, first factor most significant.
  auto digits = [&](std::size_t index) {
    std::vector<Element> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = static_cast<Element>(index % factors[i].size());
      index /= factors[i].size();
    }
    return d;
  };
  auto encode = [&](const std::vector<Element>& d) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) index = index * factors[i].size() + d[i];
    return static_cast<Element>(index);
  };
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    const auto d = digits(x);
    std::string name = "(";
    for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "," : "") + factors[i].name(d[i]);
    names.push_back(name + ")");
  }
  std::vector<Element> zero, unit;
  for (const auto& f : factors) {
    zero.push_back(f.zero());
    unit.push_back(f.unit());
  }
  SumTable t(std::move(names), encode(zero), encode(unit));
  for (std::size_t x = 0; x < n; ++x) {
    const auto dx = digits(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto dy = digits(y);
      std::vector<Element> dz(factors.size());
      bool defined = true;
      for (std::size_t i = 0; i < factors.size() && defined; ++i) {
        dz[i] = factors[i].sum_or_undefined(dx[i], dy[i]);
        defined = dz[i] != kUndefined;
      }
      if (defined) t.set(static_cast<Element>(x), static_cast<Element>(y), encode(dz));
    }
  }
  return EffectAlgebra::from_table(std::move(t));
}

EffectAlgebra horizontal_sum(const std::vector<EffectAlgebra>& summands) {
  if (summands.empty()) throw std::invalid_argument("horizontal sum needs at least one summand");
  std::set<std::string> seen;
  bool collision = false;
  for (const auto& s : summands) {
    for (Element x = 0; x < s.size(); ++x) {
      if (x == s.zero() || x == s.unit()) continue;
      if (!seen.insert(s.name(x)).second || s.name(x) == "0" || s.name(x) == "1") collision = true;
    }
  }
  // Global layout: 0, the inner elements of each summand in order, 1.
  std::vector<std::string> names{"0"};
  std::vector<std::vector<Element>> index(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    index[i].assign(s.size(), kUndefined);
    for (Element x = 0; x < s.size(); ++x) {
      if (x == s.zero() || x == s.unit()) continue;
      index[i][x] = static_cast<Element>(names.size());
      names.push_back(collision ? s.name(x) + "_" + std::to_string(i + 1) : s.name(x));
    }
  }
  const auto unit = static_cast<Element>(names.size());
  names.push_back("1");
  for (std::size_t i = 0; i < summands.size(); ++i) {
    index[i][summands[i].zero()] = 0;
    index[i][summands[i].unit()] = unit;
  }
  SumTable t(std::move(names), 0, unit);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        const Element z = s.sum_or_undefined(x, y);
        if (z != kUndefined) t.set(index[i][x], index[i][y], index[i][z]);
      }
    }
  }
  return EffectAlgebra::from_table(std::move(t));
}

EffectAlgebra generate(const GenSpec& spec) {
  if (predicted_size(spec) > kMaxGeneratedSize) {
    throw std::invalid_argument("generated algebra would exceed " + std::to_string(kMaxGeneratedSize) + " elements");
  }
  switch (spec.kind) {
    case GenSpec::Kind::kChain:
      return chain(spec.n);
    case GenSpec::Kind::kBoolean:
      return boolean(spec.n);
    case GenSpec::Kind::kMo:
      return mo(spec.n);
    case GenSpec::Kind::kProduct:
    case GenSpec::Kind::kHsum: {
      std::vector<EffectAlgebra> parts;
      for (const auto& p : spec.parts) parts.push_back(generate(p));
      return spec.kind == GenSpec::Kind::kProduct ? product(parts) : horizontal_sum(parts);
    }
  }
  throw std::logic_error("unhandled generator kind");
}

EffectAlgebra generate(std::string_view spec) { return generate(parse_gen_spec(spec)); }

namespace {

struct Invariant {
  std::size_t ord;
  std::size_t degree;  // defined cells in the row
  std::size_t below;
  std::size_t above;
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const EffectAlgebra& e) {
  std::vector<Invariant> out;
  for (Element x = 0; x < e.size(); ++x) {
    std::size_t degree = 0;
    for (Element y = 0; y < e.size(); ++y) degree += e.defined(x, y);
    out.push_back({e.ord(x), degree, e.order().down[x].count(), e.order().up[x].count()});
  }
  return out;
}

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const EffectAlgebra& a, const EffectAlgebra& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  const auto ia = invariants(a);
  const auto ib = invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Element> f(n, kUndefined);
  std::vector<bool> used(n, false);
  f[a.zero()] = b.zero();
  f[a.unit()] = b.unit();
  used[b.zero()] = used[b.unit()] = true;
  if (ia[a.zero()] != ib[b.zero()] || ia[a.unit()] != ib[b.unit()]) return std::nullopt;

  std::vector<Element> order;
  for (Element x = 0; x < n; ++x) {
    if (x != a.zero() && x != a.unit()) order.push_back(x);
  }
  // Cells among mapped elements must agree, including definedness.
  auto consistent = [&](Element x) {
    for (Element y = 0; y < n; ++y) {
      if (f[y] == kUndefined) continue;
      for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Element z = a.sum_or_undefined(p, q);
        const Element w = b.sum_or_undefined(f[p], f[q]);
        if ((z == kUndefined) != (w == kUndefined)) return false;
        if (z != kUndefined && f[z] != kUndefined && f[z] != w) return false;
      }
    }
    return true;
  };
  auto preserves = [&]() {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const Element z = a.sum_or_undefined(x, y);
        const Element w = b.sum_or_undefined(f[x], f[y]);
        if (z == kUndefined ? w != kUndefined : w != f[z]) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return preserves();
    const Element x = order[i];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || ia[x] != ib[y]) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x) && rec(i + 1)) return true;
      used[y] = false;
      f[x] = kUndefined;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return f;
}

}  // namespace eat
