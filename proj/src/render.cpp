#include "toddpoly/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace toddpoly {
namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// "_3" or "_{12}".
std::string tex_sub(int v) {
  const std::string s = std::to_string(v);
  return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

// "^3" or "^{12}".
std::string tex_sup(int v) {
  const std::string s = std::to_string(v);
  return s.size() == 1 ? "^" + s : "^{" + s + "}";
}

// c_1^2c_4 for partition (4,1,1); "1" for the empty partition.
std::string variable_product(const Partition& p, const std::string& symbol,
                             bool latex) {
  if (p.empty()) return "1";
  const auto vm = p.value_multiplicities();  // values descending
  std::string out;
  for (auto it = vm.rbegin(); it != vm.rend(); ++it) {
    out += symbol;
    out += latex ? tex_sub(it->first) : "_" + std::to_string(it->first);
    if (it->second > 1) {
      out += latex ? tex_sup(it->second) : "^" + std::to_string(it->second);
    }
  }
  return out;
}

// m_(2,1) or m_{(2,1)}.
std::string subscripted(const Partition& p, const std::string& symbol,
                        bool latex) {
  return symbol + (latex ? "_{" + p.to_string() + "}" : "_" + p.to_string());
}

struct SignedTerm {
  bool negative = false;
  std::string magnitude;
};

std::string join_terms(const std::vector<SignedTerm>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += "-";
    } else if (latex) {
      out += terms[i].negative ? "-" : "+";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].magnitude;
  }
  return out;
}

// One signed term of a general symmetric-function sum.
SignedTerm make_term(const Partition& p, const Rat& c, const TermStyle& style,
                     bool latex) {
  SignedTerm t;
  t.negative = c < 0;
  const Rat a = abs(c);
  std::string body = style.variable_product
                         ? variable_product(p, style.symbol, latex)
                         : subscripted(p, style.symbol, latex);
  if (a == 1) {
    t.magnitude = body;
    if (style.variable_product && p.empty()) t.magnitude = "1";
    return t;
  }
  if (style.variable_product && p.empty()) {
    t.magnitude = latex ? rat_latex(a) : rat_text(a);
    return t;
  }
  if (latex) {
    t.magnitude = rat_latex(a) + body;
  } else if (a.get_den() == 1) {
    t.magnitude =
        a.get_num().get_str() + (style.variable_product ? "" : " ") + body;
  } else {
    t.magnitude = rat_text(a) + " " + body;
  }
  return t;
}

std::vector<std::pair<Partition, Rat>> ordered_terms(const SymFn& sf,
                                                     bool ascending) {
  std::vector<std::pair<Partition, Rat>> out(sf.terms().begin(),
                                             sf.terms().end());
  if (ascending) std::reverse(out.begin(), out.end());
  return out;
}

std::string symfn_sum(const SymFn& sf, const TermStyle& style, bool latex) {
  std::vector<SignedTerm> terms;
  for (const auto& [p, c] : ordered_terms(sf, style.ascending)) {
    terms.push_back(make_term(p, c, style, latex));
  }
  return join_terms(terms, latex);
}

// The genus polynomial with its denominator cleared: pairs (partition,
// integer numerator) in display order, or throws if the table's denominator
// does not clear a coefficient (which would be a construction bug).
std::vector<std::pair<Partition, Int>> cleared_numerators(const SymFn& in_e,
                                                          const Int& den,
                                                          bool ascending) {
  std::vector<std::pair<Partition, Int>> out;
  for (const auto& [p, c] : ordered_terms(in_e, ascending)) {
    Rat scaled = c * Rat(den);
    if (scaled.get_den() != 1) {
      throw std::logic_error("genus denominator does not clear a coefficient");
    }
    out.emplace_back(p, scaled.get_num());
  }
  return out;
}

std::string genus_symbol(const GenusTable& t) {
  return t.kind == GenusKind::todd ? "c" : "p";
}

std::string genus_label(const GenusTable& t) {
  return (t.kind == GenusKind::todd ? "T_" : "L_") + std::to_string(t.k);
}

bool genus_ascending(const GenusTable& t) {
  // Todd tables are classically typeset c_1-heavy term first, L tables
  // leading with the single-part term.
  return t.kind == GenusKind::todd;
}

// Factored body "(inner)/den", "inner/den", "inner", or "\frac{1}{den}(...)".
std::string genus_body(const GenusTable& t, bool latex) {
  const auto nums = cleared_numerators(t.in_e, t.denominator,
                                       genus_ascending(t));
  std::vector<SignedTerm> terms;
  const std::string symbol = genus_symbol(t);
  for (const auto& [p, n] : nums) {
    SignedTerm st;
    st.negative = n < 0;
    const Int a = abs(n);
    const std::string body = variable_product(p, symbol, latex);
    if (p.empty()) {
      st.magnitude = a.get_str();
    } else if (a == 1) {
      st.magnitude = body;
    } else {
      st.magnitude = a.get_str() + body;
    }
    terms.push_back(st);
  }
  const std::string inner = join_terms(terms, latex);
  if (t.denominator == 1) return inner;
  const bool wrap = terms.size() > 1;
  if (latex) {
    return "\\frac{1}{" + t.denominator.get_str() + "}" +
           (wrap ? "(" + inner + ")" : inner);
  }
  return (wrap ? "(" + inner + ")" : inner) + "/" + t.denominator.get_str();
}

std::string basis_letter(char which) { return std::string(1, which); }

std::string format_int_cell(const Int& v) { return v.get_str(); }

}  // namespace

std::optional<Format> format_from_string(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string rat_text(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_latex(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + Int(abs(q.get_num())).get_str() + "}{" +
         q.get_den().get_str() + "}";
}

Json partition_json(const Partition& p) {
  Json arr = Json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

void put_rat_json(Json& obj, const Rat& q) {
  obj["num"] = q.get_num().get_str();
  obj["den"] = q.get_den().get_str();
}

std::string symfn_text(const SymFn& sf, const TermStyle& style) {
  return symfn_sum(sf, style, /*latex=*/false);
}

std::string symfn_latex(const SymFn& sf, const TermStyle& style) {
  return symfn_sum(sf, style, /*latex=*/true);
}

Json symfn_terms_json(const SymFn& sf) {
  Json arr = Json::array();
  for (const auto& [p, c] : sf.terms()) {
    Json term;
    term["partition"] = partition_json(p);
    put_rat_json(term, c);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json symfn_json(const SymFn& sf) {
  Json out;
  out["degree"] = sf.degree();
  out["basis"] = std::string(1, basis_symbol(sf.basis()));
  out["convention"] = "macdonald";
  out["terms"] = symfn_terms_json(sf);
  return out;
}

std::string symfn_csv_rows(const SymFn& sf, const std::string& row_prefix) {
  std::string out;
  for (const auto& [p, c] : sf.terms()) {
    if (!row_prefix.empty()) out += row_prefix + ",";
    out += csv_quote(p.to_string()) + "," + c.get_num().get_str() + "," +
           c.get_den().get_str() + "\n";
  }
  return out;
}

std::string symfn_csv(const SymFn& sf) {
  return "partition,num,den\n" + symfn_csv_rows(sf, "");
}

std::string genus_text(const GenusTable& t, Basis display_basis) {
  std::string poly;
  if (display_basis == Basis::elementary) {
    poly = genus_body(t, /*latex=*/false);
  } else {
    TermStyle style;
    style.symbol = std::string(1, basis_symbol(display_basis));
    style.ascending = genus_ascending(t);
    poly = symfn_text(convert(t.in_e, display_basis), style);
  }
  std::string out = genus_label(t);
  if (display_basis != Basis::elementary) {
    out += " [basis " + std::string(1, basis_symbol(display_basis)) + "]";
  }
  out += " = " + poly + "\ndenominator: " + t.denominator.get_str();
  return out;
}

std::string genus_latex(const GenusTable& t, Basis display_basis) {
  if (display_basis == Basis::elementary) return genus_body(t, /*latex=*/true);
  TermStyle style;
  style.symbol = std::string(1, basis_symbol(display_basis));
  style.ascending = genus_ascending(t);
  return symfn_latex(convert(t.in_e, display_basis), style);
}

Json genus_json(const GenusTable& t, Basis display_basis) {
  Json out;
  out["kind"] = t.kind == GenusKind::todd ? "todd" : "lgenus";
  out["k"] = t.k;
  out["basis"] = std::string(1, basis_symbol(display_basis));
  out["method"] = t.method;
  out["denominator"] = t.denominator.get_str();
  const SymFn shown = display_basis == Basis::elementary
                          ? t.in_e
                          : convert(t.in_e, display_basis);
  out["terms"] = symfn_terms_json(shown);
  Json notes = Json::array();
  for (const std::string& n : genus_notes(t)) notes.push_back(n);
  out["notes"] = std::move(notes);
  return out;
}

std::string genus_csv(const GenusTable& t, Basis display_basis) {
  const SymFn shown = display_basis == Basis::elementary
                          ? t.in_e
                          : convert(t.in_e, display_basis);
  return symfn_csv(shown);
}

std::vector<std::string> genus_notes(const GenusTable& t) {
  if (t.kind == GenusKind::todd && t.k == 6) {
    return {
        "note: classical printings of the degree-6 Todd table show a term "
        "-5c_1^2c_5, which has degree 7; the correct degree-6 term is "
        "-5c_1^2c_4, as the generating-function expansion confirms"};
  }
  return {};
}

std::string basis_rows_text(char which, const std::vector<BasisRow>& rows) {
  TermStyle style;
  style.symbol = "m";
  style.ascending = true;
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!out.empty()) out += "\n";
    out += basis_letter(which) + "_" + it->lambda.to_string() + " = " +
           symfn_text(it->in_m, style);
  }
  return out;
}

std::string basis_rows_latex(char which, const std::vector<BasisRow>& rows) {
  TermStyle style;
  style.symbol = "m";
  style.ascending = true;
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!out.empty()) out += "\n";
    out += basis_letter(which) + "_{" + it->lambda.to_string() + "} = " +
           symfn_latex(it->in_m, style) + " \\\\";
  }
  return out;
}

Json basis_rows_json(char which, int k, const std::vector<BasisRow>& rows) {
  Json out;
  out["which"] = basis_letter(which);
  out["k"] = k;
  Json arr = Json::array();
  for (const BasisRow& row : rows) {
    Json r;
    r["lambda"] = partition_json(row.lambda);
    r["terms"] = symfn_terms_json(row.in_m);
    arr.push_back(std::move(r));
  }
  out["rows"] = std::move(arr);
  Json notes = Json::array();
  for (const std::string& n : basis_notes(which, k)) notes.push_back(n);
  out["notes"] = std::move(notes);
  return out;
}

std::string basis_rows_csv(const std::vector<BasisRow>& rows) {
  std::string out = "lambda,mu,num,den\n";
  for (const BasisRow& row : rows) {
    out += symfn_csv_rows(row.in_m, csv_quote(row.lambda.to_string()));
  }
  return out;
}

std::vector<std::string> basis_notes(char which, int k) {
  if (which == 'g' && k == 4) {
    return {
        "note: classical printings of the weight-4 g table show the (3,1) "
        "row as f_(3,1)+6f_(3), which mixes weights; the correct row is "
        "f_(3,1)+6f_(4), as the coefficient-matrix construction confirms"};
  }
  return {};
}

std::string cmatrix_text(const CoeffMatrix& m) {
  std::string out = "k: " + std::to_string(m.k) + "\nlabels: ";
  for (size_t i = 0; i < m.index.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.index[i].to_string();
  }
  out += "\n[";
  for (size_t i = 0; i < m.rows.size(); ++i) {
    if (i > 0) out += ",\n ";
    out += "[";
    for (size_t j = 0; j < m.rows[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += format_int_cell(m.rows[i][j]);
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string cmatrix_latex(const CoeffMatrix& m) {
  std::string out = "% labels: ";
  for (size_t i = 0; i < m.index.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.index[i].to_string();
  }
  out += "\n\\begin{pmatrix}\n";
  for (size_t i = 0; i < m.rows.size(); ++i) {
    for (size_t j = 0; j < m.rows[i].size(); ++j) {
      if (j > 0) out += " & ";
      out += format_int_cell(m.rows[i][j]);
    }
    out += " \\\\\n";
  }
  out += "\\end{pmatrix}";
  return out;
}

Json cmatrix_json(const CoeffMatrix& m) {
  Json out;
  out["k"] = m.k;
  Json rows = Json::array();
  for (size_t i = 0; i < m.index.size(); ++i) {
    Json row;
    row["mu"] = partition_json(m.index[i]);
    Json cols = Json::array();
    for (size_t j = 0; j < m.index.size(); ++j) {
      Json cell;
      cell["lambda"] = partition_json(m.index[j]);
      cell["value"] = m.rows[i][j].get_str();
      cols.push_back(std::move(cell));
    }
    row["cols"] = std::move(cols);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string cmatrix_csv(const CoeffMatrix& m) {
  std::string out = "mu,lambda,value\n";
  for (size_t i = 0; i < m.index.size(); ++i) {
    for (size_t j = 0; j < m.index.size(); ++j) {
      out += csv_quote(m.index[i].to_string()) + "," +
             csv_quote(m.index[j].to_string()) + "," +
             m.rows[i][j].get_str() + "\n";
    }
  }
  return out;
}

std::string numbers_text(const NumbersTableView& t) {
  const bool show_agree = t.methods.size() > 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"k"};
  header.insert(header.end(), t.methods.begin(), t.methods.end());
  if (show_agree) header.push_back("agree");
  cells.push_back(header);
  for (const NumbersRow& row : t.rows) {
    std::vector<std::string> line{std::to_string(row.k)};
    for (const Rat& v : row.values) line.push_back(rat_text(v));
    if (show_agree) line.push_back(row.agree ? "yes" : "NO");
    cells.push_back(std::move(line));
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& line : cells) {
    for (size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::string out;
  for (size_t r = 0; r < cells.size(); ++r) {
    if (r > 0) out += "\n";
    std::string line;
    for (size_t i = 0; i < cells[r].size(); ++i) {
      if (i > 0) line += "  ";
      line += cells[r][i];
      if (i + 1 < cells[r].size()) {
        line += std::string(width[i] - cells[r][i].size(), ' ');
      }
    }
    out += line;
  }
  for (const std::string& n : t.notes) out += "\n" + n;
  return out;
}

std::string numbers_latex(const NumbersTableView& t) {
  const bool show_agree = t.methods.size() > 1;
  std::string out = "\\begin{tabular}{";
  out += std::string(t.methods.size() + 1 + (show_agree ? 1 : 0), 'r');
  out += "}\nk";
  for (const std::string& m : t.methods) out += " & \\text{" + m + "}";
  if (show_agree) out += " & \\text{agree}";
  out += " \\\\\n";
  for (const NumbersRow& row : t.rows) {
    out += std::to_string(row.k);
    for (const Rat& v : row.values) out += " & " + rat_latex(v);
    if (show_agree) out += std::string(" & ") + (row.agree ? "yes" : "NO");
    out += " \\\\\n";
  }
  out += "\\end{tabular}";
  for (const std::string& n : t.notes) out += "\n% " + n;
  return out;
}

Json numbers_json(const NumbersTableView& t) {
  Json out;
  out["family"] = t.family;
  Json methods = Json::array();
  for (const std::string& m : t.methods) methods.push_back(m);
  out["methods"] = std::move(methods);
  Json rows = Json::array();
  for (const NumbersRow& row : t.rows) {
    Json r;
    r["k"] = row.k;
    if (t.methods.size() == 1) {
      if (t.integer_valued) {
        r["value"] = row.values.at(0).get_num().get_str();
      } else {
        put_rat_json(r, row.values.at(0));
      }
    } else {
      Json values;
      for (size_t i = 0; i < t.methods.size(); ++i) {
        if (t.integer_valued) {
          values[t.methods[i]] = row.values.at(i).get_num().get_str();
        } else {
          Json v;
          put_rat_json(v, row.values.at(i));
          values[t.methods[i]] = std::move(v);
        }
      }
      r["values"] = std::move(values);
      r["agree"] = row.agree;
    }
    if (t.integer_valued) {
      Json fac = Json::array();
      for (const PrimePower& pp : row.factorization) {
        Json pair = Json::array();
        pair.push_back(pp.prime.get_str());
        pair.push_back(pp.exponent);
        fac.push_back(std::move(pair));
      }
      r["factorization"] = std::move(fac);
    }
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  Json notes = Json::array();
  for (const std::string& n : t.notes) notes.push_back(n);
  out["notes"] = std::move(notes);
  return out;
}

std::string numbers_csv(const NumbersTableView& t) {
  const bool show_agree = t.methods.size() > 1;
  std::string out = "k";
  for (const std::string& m : t.methods) out += "," + m;
  if (show_agree) out += ",agree";
  out += "\n";
  for (const NumbersRow& row : t.rows) {
    out += std::to_string(row.k);
    for (const Rat& v : row.values) out += "," + rat_text(v);
    if (show_agree) out += row.agree ? ",yes" : ",NO";
    out += "\n";
  }
  return out;
}

}  // namespace toddpoly
