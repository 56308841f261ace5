#include "eds/document.hpp"

#include <algorithm>
#include <sstream>

namespace eds {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto toks = split_ws(strip_comment(line));
      if (!toks.empty()) rows.emplace_back(no, std::move(toks));
    }
  }
};

[[noreturn]] void fail(int line, int column, const std::string& msg) { throw parse_error(msg, line, column); }

int parse_int(const std::string& tok, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line, 1, "expected an integer for " + what + ", got '" + tok + "'");
  }
}

}  // namespace

Form parse_form_literal(const SpacePtr& space, const std::string& text, int line) {
  // Grammar: "0" | term ((" + " | " - ") term)* with term = rational[*name[^name...]]
  std::vector<std::pair<Rational, std::string>> terms;  // (sign applied later)
  std::string work = text;
  // Tokenize on " + " / " - " while keeping leading sign inside the first coefficient.
  std::vector<std::pair<int, std::string>> pieces;  // (sign, piece)
  std::size_t pos = 0;
  int sign = 1;
  while (pos < work.size()) {
    std::size_t plus = work.find(" + ", pos);
    std::size_t minus = work.find(" - ", pos);
    std::size_t cut = std::min(plus, minus);
    pieces.emplace_back(sign, work.substr(pos, cut == std::string::npos ? cut : cut - pos));
    if (cut == std::string::npos) break;
    sign = (cut == plus) ? 1 : -1;
    pos = cut + 3;
  }
  if (pieces.empty()) fail(line, 1, "empty form literal");
  if (pieces.size() == 1 && pieces[0].second == "0") return Form(space, 0);

  std::optional<int> degree;
  Form result(space, 0);
  bool first = true;
  for (auto& [piece_sign, piece] : pieces) {
    // trim
    const auto b = piece.find_first_not_of(" \t");
    const auto e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) fail(line, 1, "empty term in form literal");
    piece = piece.substr(b, e - b + 1);
    const auto star = piece.find('*');
    const std::string coeff_text = piece.substr(0, star);
    Rational coeff;
    try {
      coeff = parse_rational(coeff_text);
    } catch (const error& err) {
      fail(line, 1, err.what());
    }
    if (piece_sign < 0) coeff = -coeff;
    std::vector<int> indices;
    if (star != std::string::npos) {
      std::string names = piece.substr(star + 1);
      std::size_t p = 0;
      while (p <= names.size()) {
        const auto caret = names.find('^', p);
        const std::string name = names.substr(p, caret == std::string::npos ? caret : caret - p);
        const int idx = space->index_of(name);
        if (idx == 0) fail(line, 1, "unknown basis name '" + name + "'");
        indices.push_back(idx);
        if (caret == std::string::npos) break;
        p = caret + 1;
      }
    }
    for (std::size_t k = 1; k < indices.size(); ++k)
      if (indices[k] <= indices[k - 1])
        fail(line, 1, "multi-index not strictly increasing in canonical basis order");
    const int d = static_cast<int>(indices.size());
    if (degree && *degree != d) fail(line, 1, "mixed degrees in a single form literal");
    degree = d;
    if (first) {
      result = Form(space, d);
      first = false;
    }
    result = result + Form::term(space, coeff, MultiIndex(std::move(indices)));
  }
  return result;
}

std::string form_literal(const Form& f) { return f.str(); }

EdsDocument parse_document(const std::string& text) {
  const Lines lines(text);
  if (lines.rows.empty()) fail(1, 1, "empty document");
  std::size_t at = 0;
  const auto& [l0, head] = lines.rows[at];
  if (head.size() != 2 || head[0] != "eds" || head[1] != "1") fail(l0, 1, "expected header 'eds 1'");
  ++at;

  int dim = 0;
  std::vector<std::string> coframe;
  // First pass over the prologue: dim, coframe, auxiliary names.
  std::vector<std::string> aux_names;
  for (std::size_t k = at; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    if (toks[0] == "dim") {
      if (toks.size() != 2) fail(ln, 1, "expected 'dim N'");
      dim = parse_int(toks[1], ln, "dimension");
      if (dim < 1) fail(ln, 1, "dimension must be positive");
    } else if (toks[0] == "coframe") {
      coframe.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "aux") {
      if (toks.size() < 2) fail(ln, 1, "expected 'aux NAME value FORM diff FORM'");
      aux_names.push_back(toks[1]);
    }
  }
  if (dim == 0) fail(l0, 1, "missing 'dim' line");
  if (coframe.empty())
    for (int i = 1; i <= dim; ++i) coframe.push_back("w" + std::to_string(i));
  if (static_cast<int>(coframe.size()) != dim) fail(l0, 1, "coframe name count does not match dim");

  SpacePtr space;
  try {
    space = Space::make(coframe, aux_names);
  } catch (const error& err) {
    fail(l0, 1, err.what());
  }

  StructureDifferential sd(space);
  std::vector<Form> generators;
  std::vector<Vector> flag;
  std::optional<CoframeSplit> split;
  bool has_flag = false;

  const auto rejoin = [](const std::vector<std::string>& toks, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < toks.size(); ++i) {
      if (i > from) out += " ";
      out += toks[i];
    }
    return out;
  };

  for (std::size_t k = at; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    const std::string& key = toks[0];
    if (key == "dim" || key == "coframe") continue;
    if (key == "aux") {
      // aux NAME value FORM diff FORM
      const auto value_at = std::find(toks.begin(), toks.end(), "value");
      const auto diff_at = std::find(toks.begin(), toks.end(), "diff");
      if (value_at == toks.end() || diff_at == toks.end() || diff_at < value_at)
        fail(ln, 1, "expected 'aux NAME value FORM diff FORM'");
      std::string vtext, dtext;
      for (auto it = value_at + 1; it != diff_at; ++it) vtext += (vtext.empty() ? "" : " ") + *it;
      for (auto it = diff_at + 1; it != toks.end(); ++it) dtext += (dtext.empty() ? "" : " ") + *it;
      if (vtext.empty() || dtext.empty()) fail(ln, 1, "auxiliary value or differential missing");
      Form value = parse_form_literal(space, vtext, ln);
      Form diff = parse_form_literal(space, dtext, ln);
      if (value.is_zero()) value = Form(space, 1);
      if (diff.is_zero()) diff = Form(space, 2);
      if (value.degree() != 1) fail(ln, 1, "auxiliary value must be a 1-form");
      if (diff.degree() != 2) fail(ln, 1, "auxiliary differential must be a 2-form");
      try {
        sd.set_auxiliary(toks[1], std::move(value), std::move(diff));
      } catch (const error& err) {
        fail(ln, 1, err.what());
      }
    } else if (key == "d") {
      if (toks.size() < 4 || toks[2] != "=") fail(ln, 1, "expected 'd INDEX = FORM'");
      const int mu = parse_int(toks[1], ln, "coframe index");
      if (mu < 1 || mu > dim) fail(ln, 1, "structure-differential index out of range");
      Form f = parse_form_literal(space, rejoin(toks, 3), ln);
      if (f.is_zero()) f = Form(space, 2);
      if (f.degree() != 2) fail(ln, 1, "d of a coframe member must be a 2-form");
      sd.set_basis_d(mu, std::move(f));
    } else if (key == "generator") {
      Form g = parse_form_literal(space, rejoin(toks, 1), ln);
      if (g.degree() < 1) fail(ln, 1, "generators must have degree >= 1");
      generators.push_back(std::move(g));
    } else if (key == "vector") {
      if (static_cast<int>(toks.size()) != dim + 1) fail(ln, 1, "vector needs exactly dim components");
      std::vector<Rational> comp;
      for (int i = 1; i <= dim; ++i) {
        try {
          comp.push_back(parse_rational(toks[i]));
        } catch (const error& err) {
          fail(ln, i + 1, err.what());
        }
      }
      flag.emplace_back(space, std::move(comp));
      has_flag = true;
    } else if (key == "split") {
      const auto bar = std::find(toks.begin(), toks.end(), "|");
      if (bar == toks.end()) fail(ln, 1, "expected 'split i... | j...'");
      CoframeSplit s;
      for (auto it = toks.begin() + 1; it != bar; ++it) s.independence.push_back(parse_int(*it, ln, "split index"));
      for (auto it = bar + 1; it != toks.end(); ++it) s.complement.push_back(parse_int(*it, ln, "split index"));
      for (int i : s.independence)
        if (i < 1 || i > dim) fail(ln, 1, "split index out of range");
      for (int i : s.complement)
        if (i < 1 || i > dim) fail(ln, 1, "split index out of range");
      split = std::move(s);
    } else {
      fail(ln, 1, "unknown directive '" + key + "'");
    }
  }

  EdsDocument doc{space, std::move(sd), std::move(generators),
                  has_flag ? std::optional<std::vector<Vector>>(std::move(flag)) : std::nullopt, std::move(split)};
  return doc;
}

std::string serialize_document(const EdsDocument& doc) {
  std::ostringstream out;
  const SpacePtr& space = doc.space;
  out << "eds 1\n";
  out << "dim " << space->dim() << "\n";
  out << "coframe";
  for (const auto& name : space->coframe_names()) out << " " << name;
  out << "\n";
  for (int j = 0; j < space->auxiliary_count(); ++j) {
    const int idx = space->dim() + j + 1;
    if (!doc.sd.auxiliary_declared(idx)) continue;
    const AuxiliaryData& aux = doc.sd.auxiliary(idx);
    out << "aux " << space->auxiliary_names()[j] << " value " << aux.value.str() << " diff "
        << aux.differential.str() << "\n";
  }
  for (int mu = 1; mu <= space->dim(); ++mu)
    if (!doc.sd.basis_d(mu).is_zero()) out << "d " << mu << " = " << doc.sd.basis_d(mu).str() << "\n";
  for (const Form& g : doc.generators) out << "generator " << g.str() << "\n";
  if (doc.flag)
    for (const Vector& v : *doc.flag) out << "vector " << v.str() << "\n";
  if (doc.split) {
    out << "split";
    for (int i : doc.split->independence) out << " " << i;
    out << " |";
    for (int i : doc.split->complement) out << " " << i;
    out << "\n";
  }
  return out.str();
}

RiemannTensor load_riemann(const std::string& text) {
  const Lines lines(text);
  if (lines.rows.empty()) fail(1, 1, "empty curvature file");
  const auto& [l0, head] = lines.rows[0];
  if (head.size() != 2 || head[0] != "riemann" || head[1] != "1") fail(l0, 1, "expected header 'riemann 1'");
  int m = 0;
  std::optional<RiemannTensor> r;
  for (std::size_t k = 1; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    if (toks[0] == "m") {
      if (toks.size() != 2) fail(ln, 1, "expected 'm M'");
      m = parse_int(toks[1], ln, "m");
      if (m < 1) fail(ln, 1, "m must be positive");
      r.emplace(m);
    } else if (toks[0] == "R") {
      if (!r) fail(ln, 1, "'m' must come before components");
      if (toks.size() != 7 || toks[5] != "=") fail(ln, 1, "expected 'R i j k l = num/den'");
      int idx[4];
      for (int t = 0; t < 4; ++t) {
        idx[t] = parse_int(toks[t + 1], ln, "index");
        if (idx[t] < 1 || idx[t] > m) fail(ln, 1, "curvature index out of range");
      }
      Rational value;
      try {
        value = parse_rational(toks[6]);
      } catch (const error& err) {
        fail(ln, 7, err.what());
      }
      try {
        r->set_symmetric(idx[0], idx[1], idx[2], idx[3], value);
      } catch (const error& err) {
        fail(ln, 1, err.what());
      }
    } else {
      fail(ln, 1, "unknown directive '" + toks[0] + "' in curvature file");
    }
  }
  if (!r) fail(l0, 1, "missing 'm' line");
  if (!validate(*r)) throw error("curvature file: components violate the tensor symmetries");
  return *r;
}

std::string serialize_riemann(const RiemannTensor& r) {
  std::ostringstream out;
  out << "riemann 1\n";
  out << "m " << r.m() << "\n";
  // Independent components: i < j, k < l, (i, j) <= (k, l) lexicographically.
  for (int i = 1; i <= r.m(); ++i)
    for (int j = i + 1; j <= r.m(); ++j)
      for (int k = i; k <= r.m(); ++k)
        for (int l = k + 1; l <= r.m(); ++l) {
          if (k == i && l < j) continue;
          if (!is_zero(r.at(i, j, k, l)))
            out << "R " << i << " " << j << " " << k << " " << l << " = " << rational_str(r.at(i, j, k, l)) << "\n";
        }
  return out.str();
}

SecondFundamentalForm load_h(const std::string& text) {
  const Lines lines(text);
  if (lines.rows.empty()) fail(1, 1, "empty h file");
  const auto& [l0, head] = lines.rows[0];
  if (head.size() != 2 || head[0] != "h" || head[1] != "1") fail(l0, 1, "expected header 'h 1'");
  int m = 0, N = 0;
  std::optional<SecondFundamentalForm> h;
  for (std::size_t k = 1; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    if (toks[0] == "m") {
      m = parse_int(toks[1], ln, "m");
    } else if (toks[0] == "N") {
      N = parse_int(toks[1], ln, "N");
    } else if (toks[0] == "h") {
      if (!h) {
        if (m < 1 || N <= m) fail(ln, 1, "'m' and 'N' with N > m must come before components");
        h.emplace(m, N);
      }
      if (toks.size() != 6 || toks[4] != "=") fail(ln, 1, "expected 'h a i j = num/den'");
      const int a = parse_int(toks[1], ln, "a");
      const int i = parse_int(toks[2], ln, "i");
      const int j = parse_int(toks[3], ln, "j");
      if (a <= m || a > N || i < 1 || i > m || j < 1 || j > m) fail(ln, 1, "h index out of range");
      try {
        h->set(a, i, j, parse_rational(toks[5]));
      } catch (const error& err) {
        fail(ln, 6, err.what());
      }
    } else {
      fail(ln, 1, "unknown directive '" + toks[0] + "' in h file");
    }
  }
  if (!h) {
    if (m < 1 || N <= m) fail(l0, 1, "h file must declare m and N with N > m");
    h.emplace(m, N);
  }
  return *h;
}

std::string serialize_h(const SecondFundamentalForm& h) {
  std::ostringstream out;
  out << "h 1\n";
  out << "m " << h.m() << "\n";
  out << "N " << h.N() << "\n";
  for (int a = h.m() + 1; a <= h.N(); ++a)
    for (int i = 1; i <= h.m(); ++i)
      for (int j = i; j <= h.m(); ++j)
        if (!is_zero(h.at(a, i, j)))
          out << "h " << a << " " << i << " " << j << " = " << rational_str(h.at(a, i, j)) << "\n";
  return out.str();
}

CartanLemmaDocument parse_cartan_lemma_document(const std::string& text) {
  const Lines lines(text);
  if (lines.rows.empty()) fail(1, 1, "empty document");
  const auto& [l0, head] = lines.rows[0];
  if (head.size() != 2 || head[0] != "cartan-lemma" || head[1] != "1")
    fail(l0, 1, "expected header 'cartan-lemma 1'");
  int dim = 0;
  std::vector<std::string> coframe;
  for (std::size_t k = 1; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    if (toks[0] == "dim") dim = parse_int(toks[1], ln, "dimension");
    if (toks[0] == "coframe") coframe.assign(toks.begin() + 1, toks.end());
  }
  if (dim < 1) fail(l0, 1, "missing or invalid 'dim' line");
  if (coframe.empty())
    for (int i = 1; i <= dim; ++i) coframe.push_back("w" + std::to_string(i));
  SpacePtr space = Space::make(coframe);

  CartanLemmaDocument doc{space, {}, {}};
  const auto rejoin = [](const std::vector<std::string>& toks, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < toks.size(); ++i) {
      if (i > from) out += " ";
      out += toks[i];
    }
    return out;
  };
  for (std::size_t k = 1; k < lines.rows.size(); ++k) {
    const auto& [ln, toks] = lines.rows[k];
    if (toks[0] == "dim" || toks[0] == "coframe") continue;
    if (toks[0] == "theta" || toks[0] == "omega") {
      Form f = parse_form_literal(space, rejoin(toks, 1), ln);
      if (f.is_zero()) f = Form(space, 1);
      if (f.degree() != 1) fail(ln, 1, "theta/omega entries must be 1-forms");
      (toks[0] == "theta" ? doc.theta : doc.omega).push_back(std::move(f));
    } else {
      fail(ln, 1, "unknown directive '" + toks[0] + "'");
    }
  }
  return doc;
}

}  // namespace eds
