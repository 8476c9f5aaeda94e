#include "binom/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace binom {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits on `sep` outside (), [], {}.
std::vector<std::pair<std::string, size_t>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::string, size_t>> out;
  int depth = 0;
  size_t start = 0;
  for (size_t k = 0; k <= s.size(); ++k) {
    char c = k < s.size() ? s[k] : sep;
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if ((c == sep && depth == 0) || k == s.size()) {
      out.emplace_back(std::string(s.substr(start, k - start)), start);
      start = k + 1;
    }
  }
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BadFieldSpec("expected an integer for " + what + ", got '" + s + "'");
  }
}

// Line/column bookkeeping over the original text.
struct Source {
  std::string_view text;
  std::pair<int, int> at(size_t offset) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < offset && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }
  [[noreturn]] void fail(const std::string& what, size_t offset) const {
    auto [l, c] = at(offset);
    throw SyntaxError(what, l, c);
  }
};

std::string strip_position(const std::string& what) {
  // "L:C: message" -> "message"
  size_t a = what.find(':');
  if (a == std::string::npos) return what;
  size_t b = what.find(": ", a + 1);
  return b == std::string::npos ? what : what.substr(b + 2);
}

}  // namespace

Field parse_field(std::string_view text) {
  std::string t = trim(text);
  if (t == "QQ") return Field::rationals();
  auto inside = [&](const std::string& head) -> std::optional<std::string> {
    if (t.size() > head.size() + 1 && t.compare(0, head.size() + 1, head + "(") == 0 && t.back() == ')')
      return trim(std::string_view(t).substr(head.size() + 1, t.size() - head.size() - 2));
    return std::nullopt;
  };
  if (auto in = inside("QQ")) {
    if (in->compare(0, 4, "zeta") != 0) throw BadFieldSpec("expected QQ(zeta N), got " + t);
    long n = parse_long(trim(std::string_view(*in).substr(4)), "the cyclotomic order");
    if (n < 1 || n > 100000) throw BadFieldSpec("cyclotomic order out of range: " + t);
    return Field::cyclotomic(static_cast<int>(n));
  }
  if (auto in = inside("GF")) {
    std::string spec = *in, modulus;
    size_t semi = spec.find(';');
    if (semi != std::string::npos) {
      modulus = trim(std::string_view(spec).substr(semi + 1));
      spec = trim(std::string_view(spec).substr(0, semi));
    }
    long p = 0, k = 1;
    size_t caret = spec.find('^');
    if (caret == std::string::npos) {
      p = parse_long(spec, "the characteristic");
    } else {
      p = parse_long(trim(std::string_view(spec).substr(0, caret)), "the characteristic");
      k = parse_long(trim(std::string_view(spec).substr(caret + 1)), "the extension degree");
    }
    if (p < 2 || k < 1 || k > 40) throw BadFieldSpec(t);
    if (modulus.empty()) {
      if (k == 1) return Field::finite(GaloisField::make(static_cast<uint32_t>(p), 1, {0, 1}));
      return Field::finite(GaloisField::make_default(static_cast<uint32_t>(p), static_cast<int>(k)));
    }
    // the modulus is read over QQ[t] with integer coefficients, then reduced mod p
    RingPtr aux = make_ring(Field::rationals(), {"t"});
    Polynomial m;
    try {
      m = parse_polynomial(modulus, *aux);
    } catch (const UsageError& e) {
      throw BadFieldSpec("modulus: " + strip_position(e.what()));
    }
    if (m.is_zero()) throw BadFieldSpec("zero modulus");
    std::vector<uint32_t> coeffs(static_cast<size_t>(m.lm()[0]) + 1, 0);
    for (const auto& term : m.terms()) {
      const BigRational& q = term.c.rational_value();
      if (q.get_den() != 1) throw BadFieldSpec("modulus coefficients must be integers");
      BigInt r = q.get_num() % p;
      if (r < 0) r += p;
      coeffs[static_cast<size_t>(term.m[0])] = static_cast<uint32_t>(r.get_ui());
    }
    return Field::finite(GaloisField::make(static_cast<uint32_t>(p), static_cast<int>(k), coeffs));
  }
  throw BadFieldSpec("unknown field '" + t + "'");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"radical", "minprimes", "cellular", "assprimes",
                                                 "isprimary", "hull", "primary", "circuits"};
  return names;
}

const IdealDecl& Session::find(const std::string& name) const {
  for (const auto& d : ideals)
    if (d.name == name) return d;
  throw UsageError("unknown ideal '" + name + "'");
}

namespace {

PartialCharacter build_character(const Ring& r, const CharacterDecl& c) {
  uint32_t cell = 0;
  std::vector<int> idx;
  for (const auto& v : c.cell) {
    int i = r.index_of(v);
    if (i < 0) throw UsageError("unknown variable '" + v + "' in character");
    cell |= 1u << i;
    idx.push_back(i);
  }
  std::vector<IntVector> rows;
  for (const auto& row : c.rows) {
    IntVector full(r.nvars(), BigInt(0));
    for (size_t k = 0; k < idx.size(); ++k) full[idx[k]] = row[k];
    rows.push_back(full);
  }
  return PartialCharacter::from_generators(r.field, r.nvars(), cell, rows, c.values);
}

}  // namespace

Ideal Session::ideal(const std::string& name) const {
  const IdealDecl& d = find(name);
  if (d.from_character) return ideal_from_character(build_character(*ring, d.character), ring);
  return Ideal(ring, d.gens);
}

PartialCharacter Session::character(const std::string& name) const {
  const IdealDecl& d = find(name);
  if (d.from_character) return build_character(*ring, d.character);
  // a lattice ideal given by generators: read its character off the torus part
  Ideal i = Ideal(ring, d.gens);
  uint32_t all = (1u << ring->nvars()) - 1;
  Ideal sat = saturate_monomial(i, cell_product(all));
  if (sat != i) throw UsageError("'" + name + "' is not a lattice ideal (a variable is a zerodivisor)");
  return character_from_cellular(i, all);
}

bool operator==(const Session& a, const Session& b) {
  if (!a.ring || !b.ring) return a.ring == b.ring;
  return a.ring->field == b.ring->field && a.ring->names == b.ring->names && a.ring->order == b.ring->order &&
         a.ideals == b.ideals && a.commands == b.commands;
}

Session parse_session(std::string_view text, MonomialOrder::Kind order) {
  Source src{text};
  // blank out comments, keeping offsets
  std::string clean(text);
  for (size_t k = 0; k < clean.size(); ++k)
    if (clean[k] == '#')
      while (k < clean.size() && clean[k] != '\n') clean[k++] = ' ';

  Session s;
  auto statements = split_top(clean, ';');
  if (!trim(statements.back().first).empty()) {
    size_t off = statements.back().second;
    while (off < clean.size() && std::isspace(static_cast<unsigned char>(clean[off]))) ++off;
    src.fail("missing ';' at the end of the statement", off);
  }
  statements.pop_back();
  for (const auto& [raw, offset] : statements) {
    size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    size_t base = offset + lead;
    std::string st = raw.substr(lead);
    if (trim(st).empty()) src.fail("empty statement", base);
    size_t kw_end = 0;
    while (kw_end < st.size() && (std::isalnum(static_cast<unsigned char>(st[kw_end])) || st[kw_end] == '_')) ++kw_end;
    std::string kw = st.substr(0, kw_end);
    std::string rest = st.substr(kw_end);
    size_t rest_off = base + kw_end;

    if (kw == "ring") {
      if (s.ring) src.fail("only one ring declaration is allowed", base);
      size_t open = rest.find('[');
      size_t close = rest.rfind(']');
      if (open == std::string::npos || close == std::string::npos || close < open)
        src.fail("expected ring FIELD[v1,...,vn]", base);
      if (!trim(std::string_view(rest).substr(close + 1)).empty()) src.fail("unexpected text after ']'", rest_off + close + 1);
      Field f = parse_field(std::string_view(rest).substr(0, open));
      std::vector<std::string> names;
      for (const auto& [v, voff] : split_top(std::string_view(rest).substr(open + 1, close - open - 1), ',')) {
        std::string name = trim(v);
        if (!is_identifier(name)) src.fail("bad variable name '" + name + "'", rest_off + open + 1 + voff);
        names.push_back(name);
      }
      s.ring = make_ring(f, names, order);
      continue;
    }
    if (!s.ring) src.fail("the first statement must declare the ring", base);

    if (kw == "ideal" || kw == "character") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) src.fail("expected '=' in " + kw + " declaration", rest_off);
      std::string name = trim(std::string_view(rest).substr(0, eq));
      if (!is_identifier(name)) src.fail("bad name '" + name + "'", rest_off);
      if (std::any_of(s.ideals.begin(), s.ideals.end(), [&](const IdealDecl& d) { return d.name == name; }))
        src.fail("'" + name + "' is declared twice", rest_off);
      std::string body = rest.substr(eq + 1);
      size_t body_off = rest_off + eq + 1;
      IdealDecl d;
      d.name = name;
      if (kw == "ideal") {
        auto [l, c] = src.at(body_off);
        try {
          d.gens = parse_polynomial_list(body, *s.ring, l, c);
        } catch (const SyntaxError& e) {
          std::string msg = strip_position(e.what());
          if (msg.find("unknown variable") != std::string::npos) throw UnknownVariable(msg, e.line(), e.column());
          throw;
        }
      } else {
        d.from_character = true;
        // {vars} [[row], ...] [values]
        auto parts = split_top(trim(body), ' ');
        std::vector<std::string> groups;
        for (auto& [p, poff] : parts) {
          (void)poff;
          if (trim(p).empty()) continue;
          if (!groups.empty() && !(p[0] == '{' || p[0] == '[')) {
            groups.back() += " " + p;
          } else {
            groups.push_back(p);
          }
        }
        if (groups.size() != 3 || groups[0].front() != '{' || groups[0].back() != '}' || groups[1].front() != '[' ||
            groups[2].front() != '[')
          src.fail("expected character NAME = {vars} [[row],...] [values]", body_off);
        for (const auto& [v, voff] : split_top(std::string_view(groups[0]).substr(1, groups[0].size() - 2), ',')) {
          (void)voff;
          std::string vn = trim(v);
          if (vn.empty()) continue;
          if (s.ring->index_of(vn) < 0) {
            auto [l, c] = src.at(body_off);
            throw UnknownVariable("unknown variable '" + vn + "'", l, c);
          }
          d.character.cell.push_back(vn);
        }
        std::string rows = trim(std::string_view(groups[1]).substr(1, groups[1].size() - 2));
        for (const auto& [row, roff] : split_top(rows, ',')) {
          (void)roff;
          std::string rr = trim(row);
          if (rr.empty()) continue;
          if (rr.front() != '[' || rr.back() != ']') src.fail("lattice rows must be bracketed", body_off);
          IntVector v;
          for (const auto& [x, xoff] : split_top(std::string_view(rr).substr(1, rr.size() - 2), ',')) {
            (void)xoff;
            std::string xs = trim(x);
            BigInt b;
            if (xs.empty() || b.set_str(xs, 10) != 0) src.fail("bad integer '" + xs + "'", body_off);
            v.push_back(b);
          }
          if (v.size() != d.character.cell.size()) src.fail("row length differs from the number of cell variables", body_off);
          d.character.rows.push_back(v);
        }
        std::string vals = trim(std::string_view(groups[2]).substr(1, groups[2].size() - 2));
        for (const auto& [x, xoff] : split_top(vals, ',')) {
          (void)xoff;
          if (trim(x).empty()) continue;
          d.character.values.push_back(parse_scalar(trim(x), s.ring->field));
        }
        if (d.character.values.size() != d.character.rows.size()) src.fail("one value per lattice row expected", body_off);
        build_character(*s.ring, d.character);  // validates consistency
      }
      s.ideals.push_back(std::move(d));
      continue;
    }
    const auto& ops = command_names();
    if (std::find(ops.begin(), ops.end(), kw) != ops.end()) {
      std::string target = trim(rest);
      if (!is_identifier(target)) src.fail("expected an ideal name after '" + kw + "'", rest_off);
      s.find(target);
      s.commands.push_back({kw, target});
      continue;
    }
    src.fail("unknown statement '" + kw + "'", base);
  }
  if (!s.ring) throw SyntaxError("no ring declaration", 1, 1);
  return s;
}

std::string render_session(const Session& s) {
  std::ostringstream out;
  const Ring& r = *s.ring;
  out << "ring " << r.field.to_string() << "[";
  for (size_t k = 0; k < r.names.size(); ++k) out << (k ? "," : "") << r.names[k];
  out << "];\n";
  for (const auto& d : s.ideals) {
    if (!d.from_character) {
      out << "ideal " << d.name << " = ";
      for (size_t k = 0; k < d.gens.size(); ++k) out << (k ? ", " : "") << d.gens[k].to_string(r.names);
      out << ";\n";
      continue;
    }
    out << "character " << d.name << " = {";
    for (size_t k = 0; k < d.character.cell.size(); ++k) out << (k ? "," : "") << d.character.cell[k];
    out << "} [";
    for (size_t k = 0; k < d.character.rows.size(); ++k) {
      out << (k ? "," : "") << "[";
      for (size_t j = 0; j < d.character.rows[k].size(); ++j) out << (j ? "," : "") << d.character.rows[k][j].get_str();
      out << "]";
    }
    out << "] [";
    for (size_t k = 0; k < d.character.values.size(); ++k) out << (k ? ", " : "") << d.character.values[k].to_plain_string();
    out << "];\n";
  }
  for (const auto& c : s.commands) out << c.op << " " << c.target << ";\n";
  return out.str();
}

namespace {

std::string ideal_text(const Ideal& i) { return i.to_string(); }

json gens_json(const Ideal& i) { return i.canonical(); }

std::string display_name(const std::string& op) {
  static const std::map<std::string, std::string> names = {
      {"radical", "radical"},
      {"minprimes", "minimal primes"},
      {"cellular", "cellular decomposition"},
      {"assprimes", "associated primes"},
      {"isprimary", "primary test"},
      {"hull", "hull"},
      {"primary", "primary decomposition"},
      {"circuits", "circuit ideal"}};
  return names.at(op);
}

std::string cell_text(const Ring& r, uint32_t cell) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_vars(cell)) {
    s += (first ? "" : ",") + r.names[v];
    first = false;
  }
  return s + "}";
}

std::optional<uint32_t> try_cell(const Ideal& i) {
  try {
    return cellular_cell(i);
  } catch (const NotCellular&) {
    return std::nullopt;
  }
}

// Intersection of the components, cell by cell first: components on one cell
// share their coefficient field, so the partial results stay small.
Ideal intersect_components(const std::vector<PrimaryComponent>& cs) {
  std::map<uint32_t, std::vector<Ideal>> by_cell;
  for (const auto& c : cs) by_cell[c.prime.cell].push_back(c.ideal);
  std::vector<Ideal> parts;
  for (auto& [cell, ids] : by_cell) parts.push_back(intersect(ids));
  return intersect(parts);
}

struct Outcome {
  std::string text;
  json doc;
};

Outcome run_command(const Session& s, const Command& c, const RunOptions& opt) {
  const Ring& r = *s.ring;
  const DecomposeOptions& dopt = opt.decompose;
  Outcome o;
  std::ostringstream t;
  t << "-- " << c.op << " " << c.target << "\n";
  if (c.op == "circuits") {
    PartialCharacter rho = s.character(c.target);
    Ideal ci = circuit_ideal(rho, s.ring);
    o.doc["circuits"] = json::array();
    for (const auto& v : circuits(rho.lattice())) {
      json row = json::array();
      for (const auto& x : v) row.push_back(x.get_str());
      o.doc["circuits"].push_back(row);
      t << "circuit " << vector_to_string(v) << "\n";
    }
    o.doc["generators"] = gens_json(ci);
    t << "C = " << ideal_text(ci) << "\n";
    if (opt.verify) {
      bool rad = radical(ci, dopt) == radical(ideal_from_character(rho, s.ring), dopt);
      o.doc["certificates"] = {{"same_radical_as_lattice_ideal", rad}};
      t << "same radical as the lattice ideal: " << (rad ? "yes" : "no") << "\n";
    }
    o.text = t.str();
    return o;
  }

  Ideal i = s.ideal(c.target);
  json input = json::array();
  for (const auto& g : i.generators()) input.push_back(g.to_string(r.names));

  if (c.op == "radical") {
    Ideal rad = radical(i, dopt);
    o.doc = {{"input", input}, {"field", r.field.to_string()}, {"radical", gens_json(rad)}};
    t << ideal_text(rad) << "\n";
    if (opt.verify) {
      std::vector<Ideal> ps;
      for (const auto& p : minimal_primes(i, dopt)) ps.push_back(p.ideal);
      bool contains = rad.contains(i);
      bool meet = ps.empty() ? rad.is_unit() : intersect(ps) == rad;
      o.doc["certificates"] = {{"contains_input", contains}, {"equals_minimal_primes_intersection", meet}};
      t << "contains input: " << (contains ? "yes" : "no") << "\nequals intersection of minimal primes: "
        << (meet ? "yes" : "no") << "\n";
    }
  } else if (c.op == "minprimes" || c.op == "assprimes") {
    std::vector<BinomialPrime> ps;
    if (c.op == "minprimes") {
      ps = minimal_primes(i, dopt);
    } else if (auto cell = try_cell(i)) {
      ps = associated_primes(i, *cell);
    } else {
      ps = associated_primes(i, dopt);
    }
    o.doc = json::parse(primes_json(i, ps));
    for (size_t k = 0; k < ps.size(); ++k)
      t << "prime " << k + 1 << " on " << cell_text(r, ps[k].cell) << ": " << ideal_text(ps[k].ideal) << "\n";
    if (opt.verify) {
      bool all_prime = std::all_of(ps.begin(), ps.end(), [](const BinomialPrime& p) {
        return binomial_prime_components(p.ideal).prime;
      });
      o.doc["certificates"] = {{"all_prime", all_prime}};
      if (c.op == "minprimes") {
        std::vector<Ideal> ids;
        for (const auto& p : ps) ids.push_back(p.ideal);
        bool meet = !ids.empty() && intersect(ids) == radical(i, dopt);
        o.doc["certificates"]["intersection_is_radical"] = meet;
        t << "intersection equals the radical: " << (meet ? "yes" : "no") << "\n";
      }
      t << "all prime: " << (all_prime ? "yes" : "no") << "\n";
    }
  } else if (c.op == "cellular") {
    auto cells = cellular_decomposition(i, dopt);
    bool verified = true;  // the decomposition loop only returns once the intersection is I
    if (opt.verify) {
      std::vector<Ideal> parts;
      for (const auto& x : cells) parts.push_back(x.ideal);
      verified = !parts.empty() && intersect(parts) == i;
    }
    o.doc = json::parse(cells_json(i, cells, verified));
    for (size_t k = 0; k < cells.size(); ++k)
      t << "cell " << cell_text(r, cells[k].cell) << ": " << ideal_text(cells[k].ideal) << "\n";
    t << "intersection verified: " << (verified ? "yes" : "no") << "\n";
  } else if (c.op == "isprimary") {
    PrimaryTest pt = is_primary(i);
    o.doc = {{"input", input},
             {"field", r.field.to_string()},
             {"primary", pt.primary},
             {"radical", gens_json(pt.radical)},
             {"decided_by", pt.step}};
    o.doc["witnesses"] = json::array();
    for (const auto& w : pt.witnesses) o.doc["witnesses"].push_back(gens_json(w.ideal));
    t << (pt.primary ? "YES" : "NO") << "\nradical: " << ideal_text(pt.radical) << "\n";
    for (const auto& w : pt.witnesses) t << "associated prime: " << ideal_text(w.ideal) << "\n";
  } else if (c.op == "hull") {
    Ideal h = hull(i, dopt);
    // Binomiality is reported, not assumed, for non-cellular input.
    bool binomial = h.is_binomial();
    o.doc = {{"input", input}, {"field", r.field.to_string()}, {"hull", gens_json(h)}, {"binomial", binomial}};
    t << ideal_text(h) << "\nbinomial: " << (binomial ? "yes" : "no") << "\n";
    if (opt.verify) {
      bool ok = h.contains(i);
      o.doc["certificates"] = {{"contains_input", ok}};
      t << "contains input: " << (ok ? "yes" : "no") << "\n";
    }
  } else if (c.op == "primary") {
    PrimaryDecomposition d = primary_decomposition(i, dopt);
    if (opt.verify) {
      d.intersection_verified = !d.components.empty() && intersect_components(d.components) == i;
      d.primary_certified = std::all_of(d.components.begin(), d.components.end(), [](const PrimaryComponent& x) {
        PrimaryTest pt = is_primary(x.ideal, x.prime.cell);
        return pt.primary && pt.radical == x.prime.ideal;
      });
    }
    o.doc = json::parse(decomposition_json(i, d));
    for (size_t k = 0; k < d.components.size(); ++k) {
      const auto& x = d.components[k];
      t << "component " << k + 1 << (x.embedded ? " [embedded]" : "") << ": " << ideal_text(x.ideal)
        << "\n  prime: " << ideal_text(x.prime.ideal) << "\n";
    }
    t << "intersection verified: " << (d.intersection_verified ? "yes" : "no")
      << "\nprimary certified: " << (d.primary_certified ? "yes" : "no") << "\n";
  }
  o.doc["command"] = c.op;
  o.doc["target"] = c.target;
  o.text = t.str();
  return o;
}

}  // namespace

Report run_session(const Session& s, const RunOptions& opt) {
  Report rep;
  std::ostringstream text;
  json docs = json::array();
  for (const auto& c : s.commands) {
    try {
      Outcome o = run_command(s, c, opt);
      text << o.text;
      docs.push_back(o.doc);
    } catch (const MathError& e) {
      rep.exit_code = 2;
      rep.error = display_name(c.op) + " failed on " + c.target + ": " + e.what();
      break;
    } catch (const UsageError& e) {
      rep.exit_code = 1;
      std::string msg = e.what();
      rep.error = msg.rfind(display_name(c.op), 0) == 0 ? msg : display_name(c.op) + ": " + msg;
      break;
    } catch (const std::logic_error& e) {
      rep.exit_code = 2;
      rep.error = display_name(c.op) + " failed on " + c.target + " (internal check): " + e.what();
      break;
    }
  }
  if (opt.json && !docs.empty()) {
    rep.output = (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n";
  } else if (!opt.json) {
    rep.output = text.str();
  }
  return rep;
}

Report run_text(std::string_view text, const RunOptions& opt, MonomialOrder::Kind order) {
  Session s;
  try {
    s = parse_session(text, order);
  } catch (const UsageError& e) {
    return {"", 1, std::string("parse error: ") + e.what()};
  } catch (const MathError& e) {
    return {"", 2, std::string("while reading the input: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {"", 1, std::string("parse error: ") + e.what()};
  }
  return run_session(s, opt);
}

}  // namespace binom
