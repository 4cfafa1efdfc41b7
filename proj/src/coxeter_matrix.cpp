#include "soergel/coxeter_matrix.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "soergel/errors.hpp"

namespace soergel {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 0) throw InvalidMatrix("negative rank");
  if (entries_.size() != static_cast<std::size_t>(rank_ * rank_))
    throw InvalidMatrix("expected " + std::to_string(rank_ * rank_) + " entries");
  for (int s = 0; s < rank_; ++s) {
    if ((*this)(s, s) != 1)
      throw InvalidMatrix("diagonal entry m(" + std::to_string(s + 1) + "," +
                          std::to_string(s + 1) + ") must be 1");
    for (int t = 0; t < rank_; ++t) {
      if (s == t) continue;
      const int m = (*this)(s, t);
      if (m != (*this)(t, s)) throw InvalidMatrix("matrix is not symmetric");
      if (m != kInfinity && m < 2)
        throw InvalidMatrix("off-diagonal entries must be >= 2 or 0 (infinity)");
    }
  }
}

bool CoxeterMatrix::has_infinite_bond() const {
  return std::find(entries_.begin(), entries_.end(), kInfinity) != entries_.end();
}

int CoxeterMatrix::bond_lcm() const {
  int l = 1;
  for (int m : entries_)
    if (m != kInfinity) l = std::lcm(l, m);
  return l;
}

bool CoxeterMatrix::is_type_a() const {
  for (int s = 0; s < rank_; ++s)
    for (int t = 0; t < rank_; ++t) {
      if (s == t) continue;
      const int want = (std::abs(s - t) == 1) ? 3 : 2;
      if ((*this)(s, t) != want) return false;
    }
  return true;
}

namespace {

// Builds a matrix from a bond list; unspecified pairs commute.
CoxeterMatrix from_bonds(int rank, const std::vector<std::array<int, 3>>& bonds) {
  std::vector<int> e(static_cast<std::size_t>(rank * rank), 2);
  for (int s = 0; s < rank; ++s) e[static_cast<std::size_t>(s * rank + s)] = 1;
  for (const auto& [s, t, m] : bonds) {
    e[static_cast<std::size_t>(s * rank + t)] = m;
    e[static_cast<std::size_t>(t * rank + s)] = m;
  }
  return CoxeterMatrix(rank, std::move(e));
}

CoxeterMatrix irreducible(char family, int n, int param) {
  std::vector<std::array<int, 3>> bonds;
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) bonds.push_back({i, i + 1, 3});
  };
  switch (family) {
    case 'a':
      if (n < 1) break;
      chain(n);
      return from_bonds(n, bonds);
    case 'b':
    case 'c':
      if (n < 2) break;
      chain(n);
      bonds.back()[2] = 4;
      return from_bonds(n, bonds);
    case 'd':
      if (n < 4) break;
      chain(n - 1);
      bonds.push_back({n - 3, n - 1, 3});
      return from_bonds(n, bonds);
    case 'f':
      if (n != 4) break;
      return from_bonds(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
    case 'h':
      if (n == 3) return from_bonds(3, {{0, 1, 5}, {1, 2, 3}});
      if (n == 4) return from_bonds(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}});
      break;
    case 'i':
      if (n != 2 || param < 2) break;
      return from_bonds(2, {{0, 1, param}});
    default:
      break;
  }
  throw InvalidMatrix("unsupported Coxeter type");
}

CoxeterMatrix block_sum(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const int n = a.rank() + b.rank();
  std::vector<int> e(static_cast<std::size_t>(n * n), 2);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int& slot = e[static_cast<std::size_t>(s * n + t)];
      if (s == t)
        slot = 1;
      else if (s < a.rank() && t < a.rank())
        slot = a(s, t);
      else if (s >= a.rank() && t >= a.rank())
        slot = b(s - a.rank(), t - a.rank());
    }
  return CoxeterMatrix(n, std::move(e));
}

}  // namespace

CoxeterMatrix CoxeterMatrix::from_type(std::string_view type) {
  std::string s;
  for (char c : type)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  // Accept the multiplication sign (UTF-8) as a product separator as well.
  for (std::size_t p; (p = s.find("\xc3\x97")) != std::string::npos;) s.replace(p, 2, "x");
  if (s.empty()) throw InvalidMatrix("empty Coxeter type");

  CoxeterMatrix result(0, {});
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char family = s[pos++];
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InvalidMatrix("missing rank in Coxeter type '" + std::string(type) + "'");
    const int n = std::stoi(s.substr(start, pos - start));
    int param = 0;
    if (family == 'i') {
      if (pos >= s.size() || s[pos] != '(')
        throw InvalidMatrix("I2 needs a bond order, e.g. I2(5)");
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw InvalidMatrix("unterminated I2(m)");
      param = std::stoi(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    }
    result = block_sum(result, irreducible(family, n, param));
    if (pos < s.size()) {
      if (s[pos] != 'x') throw InvalidMatrix("unexpected character in Coxeter type '" + std::string(type) + "'");
      ++pos;
    }
  }
  return result;
}

CoxeterMatrix CoxeterMatrix::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMatrix(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.contains("rank") || !j.contains("m")) throw InvalidMatrix("matrix JSON needs 'rank' and 'm'");
  const int rank = j.at("rank").get<int>();
  const auto& rows = j.at("m");
  if (!rows.is_array() || static_cast<int>(rows.size()) != rank)
    throw InvalidMatrix("'m' must have 'rank' rows");
  std::vector<int> e;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      throw InvalidMatrix("every row of 'm' must have 'rank' entries");
    for (const auto& x : row) e.push_back(x.get<int>());
  }
  return CoxeterMatrix(rank, std::move(e));
}

CoxeterMatrix CoxeterMatrix::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMatrix("cannot open matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string CoxeterMatrix::to_json_text() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int s = 0; s < rank_; ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < rank_; ++t) row.push_back((*this)(s, t));
    rows.push_back(row);
  }
  return nlohmann::json{{"rank", rank_}, {"m", rows}}.dump();
}

Word parse_word(std::string_view text, int rank) {
  Word w;
  std::string s(text);
  if (s.empty() || s == "e") return w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int g = 0;
    try {
      std::size_t used = 0;
      g = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad generator '" + item + "' in word '" + s + "'");
    }
    if (g < 1 || g > rank)
      throw InvalidArgument("generator " + std::to_string(g) + " out of range 1.." + std::to_string(rank));
    w.push_back(g - 1);
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s;
}

}  // namespace soergel
