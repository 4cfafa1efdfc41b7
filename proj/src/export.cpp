#include "soergel/serialize.hpp"

#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

Json bigint_to_json(const BigInt& z) {
  if (auto v = to_int64(z)) return *v;
  return z.get_str();
}

Json laurent_to_json(const LaurentPoly& p) {
  Json coeffs = Json::object();
  for (const auto& t : p.terms()) coeffs[std::to_string(t.exponent)] = bigint_to_json(t.coeff);
  return Json{{"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object())
    throw InvalidArgument("polynomial JSON needs a 'coeffs' object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidArgument("bad exponent key '" + key + "'");
    }
    BigInt c;
    if (val.is_number_integer()) {
      c = BigInt(val.dump());
    } else if (val.is_string()) {
      if (c.set_str(val.get<std::string>(), 10) != 0) throw InvalidArgument("bad coefficient string");
    } else {
      throw InvalidArgument("coefficients must be integers");
    }
    terms.push_back({e, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string kl_table_csv(const KLTable& table) {
  const auto& sys = table.system();
  std::ostringstream os;
  os << "y_word,x_word,poly_json,mu\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const ElementRef x(static_cast<std::uint32_t>(i));
    for (const auto& [y, h] : table.column(x))
      os << csv_field(sys.word_string(y)) << "," << csv_field(sys.word_string(x)) << ","
         << csv_field(laurent_to_json(h).dump()) << "," << h.coeff(1).get_str() << "\n";
  }
  return os.str();
}

Json kl_table_json(const KLTable& table) {
  const auto& sys = table.system();
  Json entries = Json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const ElementRef x(static_cast<std::uint32_t>(i));
    for (const auto& [y, h] : table.column(x))
      entries.push_back(Json{{"y", sys.word_string(y)},
                             {"x", sys.word_string(x)},
                             {"poly", laurent_to_json(h)},
                             {"mu", bigint_to_json(h.coeff(1))}});
  }
  return Json{{"size", sys.size()}, {"pairs", table.pair_count()}, {"entries", std::move(entries)}};
}

Json sbim_class_json(const CoxeterSystem& sys, const Word& word, const SBimClass& c) {
  Json w = Json::array();
  for (Generator s : word) w.push_back(s + 1);
  Json summands = Json::array();
  for (const auto& s : c.summands())
    summands.push_back(Json{{"w", sys.word_string(s.w)}, {"shift", s.shift}, {"mult", bigint_to_json(s.mult)}});
  return Json{{"word", std::move(w)}, {"summands", std::move(summands)}};
}

}  // namespace soergel
