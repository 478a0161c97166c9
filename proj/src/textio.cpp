#include "qcy/textio.hpp"

#include "qcy/quiver.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcy::textio {

namespace {

std::vector<std::int64_t> parse_row(const std::string& row_text) {
  std::string cleaned = row_text;
  for (auto& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::int64_t> row;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      row.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("matrix entry is not an integer: '" + tok + "'");
    }
  }
  return row;
}

IMat rows_to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix spec has no rows");
  std::size_t cols = rows.front().size();
  if (cols == 0) throw std::invalid_argument("matrix spec has an empty row");
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("matrix spec has ragged rows");
  IMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

std::vector<int> parse_labels(const std::string& text, int m, std::size_t expected) {
  std::vector<int> labels;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("vertex label is not an integer: '" + tok + "'");
    }
    if (v < 1 || v > m) throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
    labels.push_back(v - 1);
  }
  if (labels.size() != expected)
    throw std::invalid_argument("permutation spec needs " + std::to_string(expected) + " vertex labels");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("permutation spec repeats a vertex label");
  return labels;
}

}  // namespace

IMat parse_matrix(const std::string& spec) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(spec);
  std::string row_text;
  while (std::getline(in, row_text, '/')) rows.push_back(parse_row(row_text));
  return rows_to_matrix(rows);
}

std::string matrix_to_string(const IMat& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out << '/';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
  }
  return out.str();
}

IMat parse_perm(const std::string& spec, int m) {
  if (m < 1) throw std::invalid_argument("permutation needs at least one vertex");
  std::string head = spec;
  std::string args;
  if (auto eq = spec.find('='); eq != std::string::npos) {
    head = spec.substr(0, eq);
    args = spec.substr(eq + 1);
  }

  std::vector<int> mu(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) mu[static_cast<std::size_t>(v)] = v;

  if (head == "id") {
    if (!args.empty()) throw std::invalid_argument("'id' takes no vertex labels");
  } else if (head == "swap") {
    auto labels = parse_labels(args.empty() ? "1,2" : args, m, 2);
    mu[static_cast<std::size_t>(labels[0])] = labels[1];
    mu[static_cast<std::size_t>(labels[1])] = labels[0];
  } else if (head == "cycle") {
    auto labels = parse_labels(args.empty() ? "1,2,3" : args, m, 3);
    mu[static_cast<std::size_t>(labels[0])] = labels[1];
    mu[static_cast<std::size_t>(labels[1])] = labels[2];
    mu[static_cast<std::size_t>(labels[2])] = labels[0];
  } else {
    throw std::invalid_argument("unknown permutation spec '" + spec + "' (want id, swap=i,j or cycle=i,j,k)");
  }
  return matrix_of_permutation(mu);
}

IMat load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    if (line.find('/') != std::string::npos) {
      if (!rows.empty()) throw std::invalid_argument("matrix file mixes row-slash and one-row-per-line syntax");
      std::istringstream split(line);
      std::string row_text;
      while (std::getline(split, row_text, '/')) rows.push_back(parse_row(row_text));
      while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char ch : line)
          if (!std::isspace(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("matrix file mixes row-slash and one-row-per-line syntax");
      }
      break;
    }
    rows.push_back(parse_row(line));
  }
  return rows_to_matrix(rows);
}

}  // namespace qcy::textio
