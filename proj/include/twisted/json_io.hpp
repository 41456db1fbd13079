#pragma once

// JSON encoding of rotation numbers, groups, multipliers and words. Exact
// values always travel as "p/q" strings.

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twisted/bihomomorphism.hpp"
#include "twisted/direct_products.hpp"
#include "twisted/errors.hpp"
#include "twisted/finite_groups.hpp"
#include "twisted/free_products.hpp"
#include "twisted/lattice_families.hpp"
#include "twisted/multipliers.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

using Json = nlohmann::ordered_json;

/// Raised for input that does not match a schema.
struct ParseError : Error {
  using Error::Error;
};

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

inline Rational as_rational(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError("bad rational '" + j.get<std::string>() + "': " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("exact numbers must be \"p/q\" strings, got " + j.dump());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rotation numbers

/// Declared irrationals: ["t", ...] or [{"label":"t","hint":0.41}, ...].
inline IrrationalBasis parse_basis(const Json& j) {
  IrrationalBasis basis;
  if (j.is_null()) return basis;
  if (!j.is_array()) throw ParseError("basis must be an array");
  for (const auto& item : j) {
    if (item.is_string()) {
      basis.add(item.get<std::string>());
    } else if (item.is_object()) {
      std::optional<double> hint;
      if (item.contains("hint")) hint = item.at("hint").get<double>();
      basis.add(detail::require(item, "label").get<std::string>(), hint);
    } else {
      throw ParseError("basis entries are labels or {label, hint} objects");
    }
  }
  return basis;
}

inline Json basis_to_json(const IrrationalBasis& basis) {
  Json out = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.hint(i))
      out.push_back({{"label", basis.label(i)}, {"hint", *basis.hint(i)}});
    else
      out.push_back(basis.label(i));
  }
  return out;
}

/// {"rat":"p/q","irr":{"t":"r/s"}} or the shorthand "p/q". Labels must be
/// declared in `basis`.
inline RotationNumber parse_rotation(const Json& j, const IrrationalBasis& basis) {
  if (j.is_string() || j.is_number_integer()) return RotationNumber(detail::as_rational(j), {});
  if (!j.is_object()) throw ParseError("rotation number must be an object or a \"p/q\" string");
  Rational rat = j.contains("rat") ? detail::as_rational(j.at("rat")) : Rational(0);
  std::vector<RotationNumber::Term> irr;
  if (j.contains("irr")) {
    for (const auto& [label, c] : j.at("irr").items()) {
      auto idx = basis.find(label);
      if (!idx) throw BasisMismatch("irrational '" + label + "' is not declared in the basis");
      irr.emplace_back(*idx, detail::as_rational(c));
    }
  }
  return RotationNumber(rat, std::move(irr));
}

inline Json to_json(const RotationNumber& x, const IrrationalBasis& basis) {
  check_basis(x, basis);
  Json irr = Json::object();
  for (const auto& [i, c] : x.irrational_part()) irr[basis.label(i)] = to_string(c);
  return {{"rat", to_string(x.rational_part())}, {"irr", irr}};
}

// ---------------------------------------------------------------------------
// Groups

/// {"order":n,"table":[[...]],"names":[...]}, {"cyclic":n}, or
/// {"direct_product":[G1,G2]}.
inline FiniteGroup parse_group(const Json& j) {
  if (!j.is_object()) throw ParseError("group must be an object");
  if (j.contains("cyclic")) {
    const std::size_t n = detail::as_size(j.at("cyclic"), "cyclic order");
    if (n == 0) throw ParseError("cyclic order must be positive");
    return cyclic(n);
  }
  if (j.contains("direct_product")) {
    const Json& f = j.at("direct_product");
    if (!f.is_array() || f.size() != 2) throw ParseError("direct_product takes two groups");
    return direct_product(parse_group(f[0]), parse_group(f[1]));
  }
  const std::size_t n = detail::as_size(detail::require(j, "order"), "order");
  const Json& t = detail::require(j, "table");
  if (!t.is_array() || t.size() != n) throw ParseError("table must have 'order' rows");
  FiniteGroup::Table table(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n) throw ParseError("table rows must have 'order' entries");
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t v = detail::as_size(t[a][b], "table entry");
      if (v >= n) throw ParseError("table entry out of range");
      table[a].push_back(v);
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
    if (names.size() != n) throw ParseError("names must have 'order' entries");
  }
  return FiniteGroup::build(table, std::move(names));
}

inline Json to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (const auto& row : g.table()) table.push_back(row);
  Json out = {{"order", g.order()}, {"table", table}};
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

inline Element parse_element(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    const std::size_t v = detail::as_size(j, "element");
    if (v >= g.order()) throw ParseError("element index out of range");
    return v;
  }
  if (!j.is_string()) throw ParseError("element must be a name or an index");
  const std::string s = j.get<std::string>();
  for (Element a = 0; a < g.order(); ++a)
    if (g.name(a) == s) return a;
  throw ParseError("unknown element '" + s + "'");
}

// ---------------------------------------------------------------------------
// Multipliers

struct TorusJob {
  TorusMultiplier sigma;
};

struct G3Job {
  G3Multiplier sigma;
};

struct ProductJob {
  ProductTriple triple;
  MultiplierPtr assembled;
};

struct FreeProductJob {
  std::shared_ptr<const FreeProductMultiplier> sigma;
};

/// Any parsed multiplier description together with its irrational basis.
struct MultiplierSpec {
  std::variant<MultiplierPtr, TorusJob, G3Job, ProductJob, FreeProductJob> value;
  IrrationalBasis basis;

  /// The multiplier on a finite group, when there is one.
  MultiplierPtr finite() const {
    if (auto* m = std::get_if<MultiplierPtr>(&value)) return *m;
    if (auto* p = std::get_if<ProductJob>(&value)) return p->assembled;
    return nullptr;
  }
};

namespace detail {

inline std::vector<RotationNumber> parse_square(const Json& rows, std::size_t n, const IrrationalBasis& basis,
                                                const char* what) {
  if (!rows.is_array() || rows.size() != n)
    throw ParseError(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<RotationNumber> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError(std::string(what) + " rows must have " + std::to_string(n) + " entries");
    for (const auto& x : row) out.push_back(parse_rotation(x, basis));
  }
  return out;
}

inline void merge_basis(IrrationalBasis& into, const Json& j) {
  if (!j.contains("basis")) return;
  IrrationalBasis extra = parse_basis(j.at("basis"));
  for (std::size_t i = 0; i < extra.size(); ++i) {
    auto idx = into.find(extra.label(i));
    if (!idx)
      into.add(extra.label(i), extra.hint(i));
    else if (extra.hint(i))
      into.set_hint(*idx, *extra.hint(i));
  }
}

inline MultiplierPtr parse_finite(const Json& j, IrrationalBasis& basis);

inline MultiplierPtr parse_finite_with_group(const Json& j, GroupPtr group, IrrationalBasis& basis) {
  const std::string type = require(j, "type").get<std::string>();
  if (type != "table") {
    MultiplierPtr m = parse_finite(j, basis);
    if (m->group().table() != group->table()) throw DomainMismatch("multiplier is defined on a different group");
    return share(Multiplier::from_function(group, [&](Element a, Element b) { return m->value(a, b); }));
  }
  merge_basis(basis, j);
  return share(Multiplier::table(group, parse_square(require(j, "values"), group->order(), basis, "values")));
}

inline MultiplierPtr parse_finite(const Json& j, IrrationalBasis& basis) {
  merge_basis(basis, j);
  const std::string type = require(j, "type").get<std::string>();
  if (type == "klein") {
    return share(klein(as_size(require(j, "n"), "n"), as_size(require(j, "k"), "k")));
  }
  if (type == "table") {
    GroupPtr group;
    if (j.contains("group")) {
      group = share(parse_group(j.at("group")));
    } else {
      const Json& v = require(j, "values");
      if (!v.is_array() || v.empty()) throw ParseError("values must be a non-empty square array");
      group = share(cyclic(v.size()));
    }
    return share(Multiplier::table(group, parse_square(require(j, "values"), group->order(), basis, "values")));
  }
  if (type == "direct_product") {
    MultiplierPtr s1 = parse_finite(require(j, "sigma1"), basis);
    MultiplierPtr s2 = parse_finite(require(j, "sigma2"), basis);
    const Json& f = require(j, "f");
    std::shared_ptr<const Bihomomorphism> bi;
    if (f.contains("table")) {
      const Json& t = f.at("table");
      const std::size_t n1 = s1->group().order(), n2 = s2->group().order();
      if (!t.is_array() || t.size() != n1) throw ParseError("f table must have |G1| rows");
      std::vector<std::vector<RotationNumber>> table(n1);
      for (std::size_t a = 0; a < n1; ++a) {
        if (!t[a].is_array() || t[a].size() != n2) throw ParseError("f table rows must have |G2| entries");
        for (const auto& x : t[a]) table[a].push_back(parse_rotation(x, basis));
      }
      bi = std::make_shared<const Bihomomorphism>(s1->group_ptr(), s2->group_ptr(), std::move(table));
    } else {
      bi = std::make_shared<const Bihomomorphism>(Bihomomorphism::trivial(s1->group_ptr(), s2->group_ptr()));
    }
    return share(assemble(s1, s2, bi));
  }
  throw ParseError("unknown finite multiplier type '" + type + "'");
}

}  // namespace detail

/// Entry point for every multiplier schema.
inline MultiplierSpec parse_multiplier(const Json& j) {
  MultiplierSpec spec;
  if (!j.is_object()) throw ParseError("multiplier must be an object");
  detail::merge_basis(spec.basis, j);
  const std::string type = detail::require(j, "type").get<std::string>();

  if (type == "torus") {
    const std::size_t n = detail::as_size(detail::require(j, "n"), "n");
    Theta theta(n, spec.basis);
    if (j.contains("theta")) {
      for (const auto& [key, v] : j.at("theta").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("theta keys look like \"i,j\"");
        std::size_t i = 0, k = 0;
        try {
          i = std::stoul(key.substr(0, comma));
          k = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
          throw ParseError("bad theta key '" + key + "'");
        }
        if (i == 0 || k == 0) throw ParseError("theta keys are 1-based");
        theta.set(i - 1, k - 1, parse_rotation(v, spec.basis));
      }
    }
    spec.value = TorusJob{TorusMultiplier{std::move(theta)}};
    return spec;
  }
  if (type == "g3") {
    MuMatrix mu;
    mu.basis = spec.basis;
    if (j.contains("mu")) {
      for (const auto& [key, v] : j.at("mu").items()) {
        if (key == "31") throw ParseError("mu31 is determined by mu22 - mu13 and cannot be set");
        mu.parameter(key) = parse_rotation(v, spec.basis);
      }
    }
    spec.value = G3Job{G3Multiplier{std::move(mu)}};
    return spec;
  }
  if (type == "free_product") {
    GroupPtr g1 = share(parse_group(detail::require(j, "g1")));
    GroupPtr g2 = share(parse_group(detail::require(j, "g2")));
    // Factors are replaced by their normalized representatives, which lie
    // in the same cohomology class.
    auto side = [&](const char* key, const GroupPtr& g) {
      if (!j.contains(key)) return share(Multiplier::trivial(g));
      MultiplierPtr m = detail::parse_finite_with_group(j.at(key), g, spec.basis);
      if (!validate(*m).ok) throw InvalidMultiplier(std::string(key) + " is not a multiplier");
      return m->is_normalized() ? m : share(normalize(*m).first);
    };
    MultiplierPtr s1 = side("sigma1", g1);
    MultiplierPtr s2 = side("sigma2", g2);
    spec.value = FreeProductJob{std::make_shared<const FreeProductMultiplier>(s1, s2)};
    return spec;
  }
  if (type == "direct_product") {
    MultiplierPtr assembled = detail::parse_finite(j, spec.basis);
    const auto& form = std::get<ProductCocycle>(assembled->form());
    spec.value = ProductJob{ProductTriple{form.first, form.second, form.cross}, assembled};
    return spec;
  }
  spec.value = detail::parse_finite(j, spec.basis);
  return spec;
}

/// Square table of sigma's exponents.
inline Json table_to_json(const Multiplier& sigma, const IrrationalBasis& basis) {
  Json rows = Json::array();
  for (Element a = 0; a < sigma.group().order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < sigma.group().order(); ++b) row.push_back(to_json(sigma.value(a, b), basis));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Words

inline FPWord parse_word(const FreeProduct& fp, const Json& j) {
  if (!j.is_array()) throw ParseError("word must be an array of [factor, element] pairs");
  FPWord w;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw ParseError("letters are [factor, element] pairs");
    const std::string f = l[0].is_string() ? l[0].get<std::string>() : l[0].dump();
    if (f != "1" && f != "2") throw ParseError("letter factor must be \"1\" or \"2\"");
    const int factor = f == "1" ? 1 : 2;
    w = fp.multiply(w, fp.letter(factor, parse_element(fp.factor(factor), l[1])));
  }
  return w;
}

inline Json to_json(const FreeProduct& fp, const FPWord& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back({l.factor == 1 ? "1" : "2", fp.factor(l.factor).name(l.element)});
  return out;
}

}  // namespace twisted
