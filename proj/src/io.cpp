#include "subshift/io.hpp"

#include "subshift/constructions.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace subshift {

using nlohmann::json;

std::vector<std::string> utf8_scalars(const std::string& s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len = 1;
    if (c >= 0xF0)
      len = 4;
    else if (c >= 0xE0)
      len = 3;
    else if (c >= 0xC0)
      len = 2;
    else if (c >= 0x80)
      fail(errc::parse_error, "invalid UTF-8 continuation byte");
    if (i + len > s.size()) fail(errc::parse_error, "truncated UTF-8 sequence");
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  // Greedy longest-match over alphabet symbols lets multi-character symbols
  // appear in plain strings when unambiguous; single-scalar alphabets reduce
  // to scalar-by-scalar decoding.
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (int a = 0; a < alphabet.size(); ++a) {
      const std::string& sym = alphabet.symbol(a);
      if (sym.size() > best_len && text.compare(i, sym.size(), sym) == 0) {
        best = a;
        best_len = sym.size();
      }
    }
    if (best < 0)
      fail(errc::parse_error, "word '" + text + "' has no alphabet symbol at offset " +
                                  std::to_string(i));
    w.push_back(best);
    i += best_len;
  }
  return w;
}

namespace {

Word parse_rule(const json& rule, const Alphabet& alphabet, const std::string& where) {
  Word w;
  if (rule.is_string()) {
    return parse_word(rule.get<std::string>(), alphabet);
  }
  if (rule.is_array()) {
    for (const auto& item : rule) {
      if (!item.is_string()) fail(errc::parse_error, where + ": rule entries must be strings");
      auto idx = alphabet.index_of(item.get<std::string>());
      if (!idx) fail(errc::parse_error, where + ": unknown symbol '" + item.get<std::string>() + "'");
      w.push_back(*idx);
    }
    return w;
  }
  fail(errc::parse_error, where + ": rule must be a string or an array of symbols");
}

Alphabet parse_alphabet(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    fail(errc::parse_error, "missing alphabet array '" + key + "'");
  std::vector<std::string> symbols;
  for (const auto& s : j.at(key)) {
    if (!s.is_string()) fail(errc::parse_error, "alphabet symbols must be strings");
    symbols.push_back(s.get<std::string>());
  }
  return Alphabet(std::move(symbols));
}

}  // namespace

Substitution parse_substitution(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "substitution file must be a JSON object");
  Alphabet codomain = parse_alphabet(j, "alphabet");
  Alphabet domain = j.contains("domain_alphabet") ? parse_alphabet(j, "domain_alphabet") : codomain;
  if (!j.contains("rules") || !j.at("rules").is_object())
    fail(errc::parse_error, "missing 'rules' object");
  const auto& rules = j.at("rules");
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(domain.size()));
  for (int a = 0; a < domain.size(); ++a) {
    const std::string& sym = domain.symbol(a);
    if (!rules.contains(sym)) fail(errc::parse_error, "missing rule for letter '" + sym + "'");
    images.push_back(parse_rule(rules.at(sym), codomain, "rule '" + sym + "'"));
  }
  for (const auto& [key, value] : rules.items())
    if (!domain.index_of(key)) fail(errc::parse_error, "rule for unknown letter '" + key + "'");
  return Substitution(std::move(domain), std::move(codomain), std::move(images));
}

Substitution load_substitution(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  return parse_substitution(j);
}

json substitution_to_json(const Substitution& s) {
  json j;
  j["alphabet"] = s.codomain().symbols();
  if (!(s.domain() == s.codomain())) j["domain_alphabet"] = s.domain().symbols();
  json rules = json::object();
  bool single_scalar = true;
  for (const auto& sym : s.codomain().symbols())
    if (utf8_scalars(sym).size() != 1) single_scalar = false;
  for (int a = 0; a < s.domain().size(); ++a) {
    if (single_scalar) {
      rules[s.domain().symbol(a)] = s.image(a).to_string(s.codomain());
    } else {
      json arr = json::array();
      for (int32_t b : s.image(a).letters()) arr.push_back(s.codomain().symbol(b));
      rules[s.domain().symbol(a)] = arr;
    }
  }
  j["rules"] = rules;
  return j;
}

DirectiveSequence parse_directive_sequence(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(errc::parse_error, "directive file needs a 'kind' string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "stationary") {
    if (!j.contains("substitution")) fail(errc::parse_error, "stationary kind needs 'substitution'");
    int64_t horizon = j.value("horizon", static_cast<int64_t>(64));
    return DirectiveSequence::stationary(parse_substitution(j.at("substitution")), horizon);
  }
  if (kind == "construction_A" || kind == "construction_B") {
    if (!j.contains("d")) fail(errc::parse_error, kind + " needs 'd'");
    int d = j.at("d").get<int>();
    int levels = j.value("levels", 20);
    return kind == "construction_A" ? build_construction_a(d, levels)
                                    : build_construction_b(d, levels);
  }
  if (kind == "explicit") {
    if (!j.contains("levels") || !j.at("levels").is_array() || j.at("levels").empty())
      fail(errc::parse_error, "explicit kind needs a non-empty 'levels' array");
    std::vector<Substitution> terms;
    for (const auto& lv : j.at("levels")) terms.push_back(parse_substitution(lv));
    return DirectiveSequence::explicit_list(std::move(terms));
  }
  fail(errc::parse_error, "unknown directive kind '" + kind + "'");
}

DirectiveSequence load_directive_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  return parse_directive_sequence(j);
}

namespace {

json entry_to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<int64_t>(x.get_si());
  return x.get_str();
}

}  // namespace

json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& labels) {
  json j;
  j["labels"] = labels;
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m.at(i, c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::string matrix_to_table(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows() + 1));
  cells[0].push_back("");
  for (int c = 0; c < m.cols(); ++c) cells[0].push_back(labels.at(static_cast<size_t>(c)));
  for (int i = 0; i < m.rows(); ++i) {
    cells[static_cast<size_t>(i + 1)].push_back(labels.at(static_cast<size_t>(i)));
    for (int c = 0; c < m.cols(); ++c)
      cells[static_cast<size_t>(i + 1)].push_back(m.at(i, c).get_str());
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << std::setw(static_cast<int>(width[c]) + (c ? 2 : 0)) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string format_double(double x, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

std::string format_value(const CylinderValue& v, int precision, bool exact_mode) {
  if (exact_mode && v.exact) {
    const Rat& r = *v.exact;
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }
  return format_double(v.value, precision);
}

json oracle_report_to_json(const OracleReport& r, const Alphabet& alphabet) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["word"] = row.w.to_string(alphabet);
    jr["formula"] = row.formula;
    jr["estimate"] = row.estimate;
    jr["delta"] = row.delta;
    jr["N"] = row.iterations;
    rows.push_back(jr);
  }
  json out;
  out["rows"] = rows;
  out["max_delta"] = r.max_delta;
  out["ok"] = r.ok;
  return out;
}

}  // namespace subshift
