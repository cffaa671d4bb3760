#include "glc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace glc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Split at commas outside parentheses.
std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& s, std::size_t line) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError(static_cast<int>(line), "expected an integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(static_cast<int>(line), "bad integer '" + t + "'");
  }
  if (pos != t.size()) throw ParseError(static_cast<int>(line), "bad integer '" + t + "'");
  return v;
}

std::size_t parse_size(const std::string& s, std::size_t line) {
  long long v = parse_ll(s, line);
  if (v < 0) throw ParseError(static_cast<int>(line), "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

Multidegree parse_degree_tuple(const std::string& text, std::size_t r, std::size_t line) {
  std::string t = strip_spaces(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError(static_cast<int>(line), "expected a degree tuple like (1,0)");
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<long long> coords;
  for (const auto& part : split_top_commas(inner)) coords.push_back(parse_ll(part, line));
  if (r != 0 && coords.size() != r)
    throw ParseError(static_cast<int>(line),
                     "degree tuple has " + std::to_string(coords.size()) + " entries, expected " +
                         std::to_string(r));
  return Multidegree(std::move(coords));
}

namespace {

// One factor of a term: an integer literal or var('^' int).
void apply_factor(const RingSpec& ring, const std::string& fac, std::size_t line, Exponents& mono,
                  long long& coeff) {
  if (fac.empty()) throw ParseError(static_cast<int>(line), "empty factor in a term");
  if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
    coeff *= parse_ll(fac, line);
    return;
  }
  if (fac[0] != 'x' && fac[0] != 'y')
    throw ParseError(static_cast<int>(line), "bad factor '" + fac + "'");
  std::size_t caret = fac.find('^');
  std::string name = fac.substr(0, caret);
  long long exp = 1;
  if (caret != std::string::npos) exp = parse_ll(fac.substr(caret + 1), line);
  if (exp < 0) throw ParseError(static_cast<int>(line), "negative exponent in '" + fac + "'");
  if (name.size() < 2) throw ParseError(static_cast<int>(line), "bad variable '" + name + "'");
  long long idx = parse_ll(name.substr(1), line);
  std::size_t v;
  if (name[0] == 'x') {
    if (idx < 1 || static_cast<std::size_t>(idx) > ring.m())
      throw ParseError(static_cast<int>(line), "unknown variable '" + name + "'");
    v = static_cast<std::size_t>(idx - 1);
  } else {
    if (idx < 1 || static_cast<std::size_t>(idx) > ring.n())
      throw ParseError(static_cast<int>(line), "unknown variable '" + name + "'");
    v = ring.m() + static_cast<std::size_t>(idx - 1);
  }
  mono[v] += static_cast<int>(exp);
}

}  // namespace

Polynomial parse_polynomial(const RingSpec& ring, const std::string& text, std::size_t line) {
  std::string t = strip_spaces(text);
  if (t.empty()) throw ParseError(static_cast<int>(line), "empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < t.size()) {
    long long sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string chunk = t.substr(pos, end - pos);
    if (chunk.empty()) throw ParseError(static_cast<int>(line), "empty term in polynomial");
    Exponents mono(ring.nvars(), 0);
    long long coeff = sign;
    std::string fac;
    std::stringstream ss(chunk);
    while (std::getline(ss, fac, '*')) apply_factor(ring, fac, line, mono, coeff);
    terms.push_back(Term{std::move(mono), ring.field.from_int(coeff)});
    pos = end;
  }
  return Polynomial::from_terms(std::move(terms), ring.field);
}

ModuleElement parse_module_element(const RingSpec& ring, std::size_t rank, const std::string& text,
                                   std::size_t line) {
  auto parts = split_top_commas(text);
  if (parts.size() != rank)
    throw ParseError(static_cast<int>(line), "relation row has " + std::to_string(parts.size()) +
                                                 " components, expected " + std::to_string(rank));
  ModuleElement v;
  v.reserve(rank);
  for (const auto& part : parts) v.push_back(parse_polynomial(ring, part, line));
  return v;
}

// ----- instance files -----------------------------------------------------------

namespace {

struct RawLine {
  std::size_t no = 0;
  std::string text;
};

struct Section {
  std::size_t header = 0;
  std::vector<RawLine> lines;
  bool seen = false;
};

// key = value; returns false when the line has no '='.
bool key_value(const std::string& s, std::string& key, std::string& value) {
  std::size_t eq = s.find('=');
  if (eq == std::string::npos) return false;
  key = trim(s.substr(0, eq));
  value = trim(s.substr(eq + 1));
  return true;
}

void parse_module_section(const RingSpec& ring, const Section& sec, Presentation& pres) {
  bool have_shifts = false;
  for (const auto& ln : sec.lines) {
    std::string key, value;
    if (key_value(ln.text, key, value) && key == "shifts") {
      if (have_shifts) throw ParseError(static_cast<int>(ln.no), "duplicate shifts line");
      if (!pres.relations.empty())
        throw ParseError(static_cast<int>(ln.no), "shifts must come before relation rows");
      std::vector<Multidegree> shifts;
      for (const auto& part : split_top_commas(value))
        shifts.push_back(parse_degree_tuple(part, ring.r(), ln.no));
      if (shifts.empty()) throw ParseError(static_cast<int>(ln.no), "shifts list is empty");
      pres.f0 = FreeModule{std::move(shifts)};
      have_shifts = true;
    } else {
      if (!have_shifts) {
        pres.f0 = FreeModule{{Multidegree::zero(ring.r())}};
        have_shifts = true;
      }
      pres.relations.push_back(parse_module_element(ring, pres.f0.rank(), ln.text, ln.no));
    }
  }
  if (!have_shifts) pres.f0 = FreeModule{{Multidegree::zero(ring.r())}};
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Section ring_sec, quot_sec, m_sec, n_sec, params_sec;
  Section* cur = nullptr;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      Section* next = nullptr;
      if (line == "[ring]")
        next = &ring_sec;
      else if (line == "[quotient]")
        next = &quot_sec;
      else if (line == "[module M]")
        next = &m_sec;
      else if (line == "[module N]")
        next = &n_sec;
      else if (line == "[params]")
        next = &params_sec;
      else
        throw ParseError(static_cast<int>(no), "unknown section " + line);
      next->seen = true;
      next->header = no;
      cur = next;
      continue;
    }
    if (!cur) throw ParseError(static_cast<int>(no), "content before the first section header");
    cur->lines.push_back(RawLine{no, line});
  }
  if (!ring_sec.seen) throw ParseError(1, "missing [ring] section");

  Instance inst;
  std::size_t xvars = 0, yvars = 0;
  bool have_x = false, have_y = false;
  // first pass: sizes and characteristic
  for (const auto& ln : ring_sec.lines) {
    std::string key, value;
    if (!key_value(ln.text, key, value))
      throw ParseError(static_cast<int>(ln.no), "expected key = value");
    if (key == "xvars") {
      xvars = parse_size(value, ln.no);
      have_x = true;
    } else if (key == "yvars") {
      yvars = parse_size(value, ln.no);
      have_y = true;
    } else if (key == "char") {
      long long p = parse_ll(value, ln.no);
      if (p < 2) throw ParseError(static_cast<int>(ln.no), "characteristic must be a prime");
      try {
        PrimeField probe(static_cast<std::uint32_t>(p));
        (void)probe;
      } catch (const Error& e) {
        throw ParseError(static_cast<int>(ln.no), e.what());
      }
      inst.characteristic = static_cast<Scalar>(p);
    } else if (key.rfind("deg ", 0) == 0) {
      // second pass
    } else {
      throw ParseError(static_cast<int>(ln.no), "unknown ring key '" + key + "'");
    }
  }
  if (!have_x || !have_y)
    throw ParseError(static_cast<int>(ring_sec.header), "[ring] needs xvars and yvars");
  inst.grading.deg_x.assign(xvars, Multidegree());
  inst.grading.deg_y.assign(yvars, Multidegree());
  std::vector<bool> set_x(xvars, false), set_y(yvars, false);
  std::size_t r = 0;
  // second pass: degrees
  for (const auto& ln : ring_sec.lines) {
    std::string key, value;
    key_value(ln.text, key, value);
    if (key.rfind("deg ", 0) != 0) continue;
    std::string name = trim(key.substr(4));
    Multidegree d = parse_degree_tuple(value, r, ln.no);
    if (r == 0 && d.rank() == 0)
      throw ParseError(static_cast<int>(ln.no), "degree tuples must have at least one entry");
    r = d.rank();
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
      throw ParseError(static_cast<int>(ln.no), "bad variable '" + name + "'");
    long long idx = parse_ll(name.substr(1), ln.no);
    if (name[0] == 'x') {
      if (idx < 1 || static_cast<std::size_t>(idx) > xvars)
        throw ParseError(static_cast<int>(ln.no), "unknown variable '" + name + "'");
      inst.grading.deg_x[static_cast<std::size_t>(idx - 1)] = d;
      set_x[static_cast<std::size_t>(idx - 1)] = true;
    } else {
      if (idx < 1 || static_cast<std::size_t>(idx) > yvars)
        throw ParseError(static_cast<int>(ln.no), "unknown variable '" + name + "'");
      inst.grading.deg_y[static_cast<std::size_t>(idx - 1)] = d;
      set_y[static_cast<std::size_t>(idx - 1)] = true;
    }
  }
  for (std::size_t i = 0; i < xvars; ++i)
    if (!set_x[i])
      throw ParseError(static_cast<int>(ring_sec.header),
                       "missing degree for x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < yvars; ++j)
    if (!set_y[j])
      throw ParseError(static_cast<int>(ring_sec.header),
                       "missing degree for y" + std::to_string(j + 1));
  try {
    inst.grading.validate();
  } catch (const Error& e) {
    throw ParseError(static_cast<int>(ring_sec.header), e.what());
  }

  RingSpec rs = inst.ring();
  for (const auto& ln : quot_sec.lines)
    inst.quotient.push_back(parse_polynomial(rs, ln.text, ln.no));

  inst.mod_m.f0 = FreeModule{{Multidegree::zero(r)}};
  inst.mod_n.f0 = FreeModule{{Multidegree::zero(r)}};
  if (m_sec.seen) parse_module_section(rs, m_sec, inst.mod_m);
  if (n_sec.seen) parse_module_section(rs, n_sec, inst.mod_n);

  for (const auto& ln : params_sec.lines) {
    std::string key, value;
    if (!key_value(ln.text, key, value))
      throw ParseError(static_cast<int>(ln.no), "expected key = value");
    if (key == "window")
      inst.window = parse_size(value, ln.no);
    else if (key == "max_resolution")
      inst.max_resolution = parse_size(value, ln.no);
    else if (key == "oracle_tmax")
      inst.oracle_tmax = parse_size(value, ln.no);
    else if (key == "trunc_extra")
      inst.trunc_extra = parse_size(value, ln.no);
    else if (key == "scenario")
      inst.scenario = value;
    else
      throw ParseError(static_cast<int>(ln.no), "unknown param '" + key + "'");
  }
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_instance(in);
}

// ----- reports --------------------------------------------------------------------

std::string degree_str(const Multidegree& d) { return d.str(); }

namespace {

std::string pd_str(const PdProbe& p) {
  if (p.status == PdStatus::finite) return std::to_string(p.pd);
  return "not certified";
}

std::string yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string hypothesis_text(const HypothesisReport& h) {
  std::string s = "sharp=" + yn(h.sharp) + " cohen_macaulay=" + yn(h.cohen_macaulay) +
                  " pd(M)=" + pd_str(h.pd_m) + " pd(N)=" + pd_str(h.pd_n);
  if (h.tor_vanishes) s += " tor_vanishes=" + yn(*h.tor_vanishes);
  s += " branch=";
  if (h.branch_m && h.branch_n)
    s += "both";
  else if (h.branch_m)
    s += "finite pd of M";
  else if (h.branch_n)
    s += "finite pd of N with Tor vanishing";
  else
    s += "none";
  return s;
}

std::string duality_report_text(const DualityReport& rep) {
  std::string s = "hypotheses: " + hypothesis_text(rep.hyp) + "\n";
  s += "dim S = " + std::to_string(rep.dim_s) + ", window radius " + std::to_string(rep.window) +
       "\n";
  std::size_t ok = rep.matched();
  std::size_t total = rep.cells.size();
  if (ok == total) {
    s += "PASS " + std::to_string(ok) + "/" + std::to_string(total) + " cells\n";
    return s;
  }
  s += "FAIL " + std::to_string(ok) + "/" + std::to_string(total) + " cells\n";
  for (const auto& c : rep.cells)
    if (!c.match)
      s += "  i=" + std::to_string(c.i) + " gamma=" + c.gamma.str() +
           " lhs=" + std::to_string(c.lhs) + " rhs=" + std::to_string(c.rhs) + "\n";
  return s;
}

std::string duality_report_tsv(const DualityReport& rep) {
  std::string s = "i\tgamma\tlhs\trhs\tmatch\n";
  for (const auto& c : rep.cells)
    s += std::to_string(c.i) + "\t" + c.gamma.str() + "\t" + std::to_string(c.lhs) + "\t" +
         std::to_string(c.rhs) + "\t" + (c.match ? "1" : "0") + "\n";
  return s;
}

std::string betti_table_text(const Resolution& res) {
  std::string s;
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    auto bt = graded_betti(res, i);
    std::size_t total = 0;
    for (const auto& kv : bt) total += kv.second;
    s += std::to_string(i) + ": total " + std::to_string(total);
    if (total) {
      s += ", degrees ";
      bool first = true;
      for (const auto& kv : bt) {
        if (!first) s += ", ";
        first = false;
        s += kv.first.str();
        if (kv.second > 1) s += "x" + std::to_string(kv.second);
      }
    }
    s += "\n";
  }
  return s;
}

std::string sharp_report_text(const GradingData& g) {
  auto w = sharpness_witness(g);
  if (!w) return "sharp\n";
  std::string alpha = "(", beta = "(";
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (i) alpha += ",";
    alpha += std::to_string((*w)[i]);
  }
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (j) beta += ",";
    beta += std::to_string((*w)[g.m() + j]);
  }
  alpha += ")";
  beta += ")";
  return "not sharp: alpha = " + alpha + ", beta = " + beta + "\n";
}

}  // namespace glc
