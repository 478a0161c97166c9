// qcy: exact classification toolkit for graded twisted Calabi-Yau quiver
// algebras of global dimension 3 on quivers with a small number of vertices.
//
// Subcommands:
//   classify    enumerate candidate types per Nakayama class and filter them
//   check-type  run the filter cascade on one explicit type
//   sptest      generic-superpotential series comparison for one quiver
//   mckay       McKay incidence matrix of a representation
//   mutate      quiver mutation; with --markov, the Markov mutation tree
//   hilbert     predictive series H = p^{-1} for a type
//   repro       one-shot validation against the built-in reference lists
//
// Exit codes: 0 success, 1 verdict failure in repro, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcy/constructions.hpp"
#include "qcy/groebner.hpp"
#include "qcy/growth.hpp"
#include "qcy/matrix_poly.hpp"
#include "qcy/path_algebra.hpp"
#include "qcy/quiver.hpp"
#include "qcy/reference.hpp"
#include "qcy/search.hpp"
#include "qcy/textio.hpp"

namespace {

using nlohmann::json;
using qcy::CYType;
using qcy::FilterStatus;
using qcy::IMat;
using qcy::textio::matrix_to_string;
using qcy::textio::parse_matrix;
using qcy::textio::parse_perm;

json matrix_json(const IMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* status_name(FilterStatus s) {
  switch (s) {
    case FilterStatus::pass: return "pass";
    case FilterStatus::fail: return "fail";
    default: return "not-applicable";
  }
}

json gate_json(const qcy::GateReport& g) {
  json out;
  out["cyclotomic"] = g.cyclotomic;
  out["mult1"] = g.mult1;
  out["m_d"] = g.m_d;
  out["m_a"] = g.m_a;
  out["gk"] = g.gk ? json(*g.gk) : json(nullptr);
  out["det"] = g.det.to_string("t");
  if (g.factorization.is_product) {
    json f = json::array();
    for (auto [n, mult] : g.factorization.factors) f.push_back(json::array({n, mult}));
    out["cyclotomic_factors"] = std::move(f);
  }
  return out;
}

json record_json(const qcy::ClassificationRecord& r) {
  json out;
  out["M"] = matrix_json(r.canon.M);
  out["P"] = matrix_json(r.canon.P);
  out["d"] = r.d;
  out["survivor"] = r.survivor;
  out["starred"] = r.survivor && r.realization == "starred";
  out["realization"] = r.realization;
  if (!r.realization_via.empty()) out["realization_via"] = r.realization_via;
  if (!r.family_tags.empty()) out["family"] = r.family_tags;
  out["gate"] = gate_json(r.gate);
  json vs = json::array();
  for (const auto& v : r.verdicts) {
    json vj;
    vj["filter"] = v.filter;
    vj["status"] = status_name(v.status);
    if (!v.detail.empty()) vj["detail"] = v.detail;
    vs.push_back(std::move(vj));
  }
  out["verdicts"] = std::move(vs);
  if (r.nonneg_failure) {
    json nf;
    nf["degree"] = r.nonneg_failure->degree;
    nf["i"] = r.nonneg_failure->i + 1;
    nf["j"] = r.nonneg_failure->j + 1;
    out["nonneg_failure"] = std::move(nf);
  }
  return out;
}

std::string failing_filters(const qcy::ClassificationRecord& r) {
  std::string out;
  for (const auto& v : r.verdicts)
    if (v.status == FilterStatus::fail) {
      if (!out.empty()) out += ",";
      out += v.filter;
    }
  return out;
}

void print_record_line(std::ostream& os, const qcy::ClassificationRecord& r) {
  if (r.survivor) {
    os << "[SURVIVOR" << (r.realization == "starred" ? " starred]" : "]");
    os << " M=" << matrix_to_string(r.canon.M) << "  P=" << matrix_to_string(r.canon.P)
       << "  d=" << r.d;
    if (r.realization != "unknown")
      os << "  via=" << r.realization << (r.realization_via.empty() ? "" : " (" + r.realization_via + ")");
  } else {
    os << "[ELIMINATED] M=" << matrix_to_string(r.canon.M) << "  P=" << matrix_to_string(r.canon.P)
       << "  d=" << r.d << "  failed=" << failing_filters(r);
  }
  if (!r.family_tags.empty()) {
    os << "  family=";
    for (std::size_t i = 0; i < r.family_tags.size(); ++i)
      os << (i ? "," : "") << r.family_tags[i];
  }
  os << "\n";
}

const qcy::RealizationCatalog& shared_catalog() {
  static const qcy::RealizationCatalog c = qcy::builtin_realization_catalog();
  return c;
}

// default Nakayama class representatives for a vertex count
std::vector<std::pair<std::string, IMat>> perm_choices(const std::string& spec, int m) {
  std::vector<std::pair<std::string, IMat>> out;
  if (!spec.empty()) {
    out.emplace_back(spec, parse_perm(spec, m));
    return out;
  }
  out.emplace_back("id", parse_perm("id", m));
  if (m == 2) out.emplace_back("swap=1,2", parse_perm("swap=1,2", m));
  if (m >= 3) {
    out.emplace_back("swap=2,3", parse_perm("swap=2,3", m));
    out.emplace_back("cycle=1,2,3", parse_perm("cycle=1,2,3", m));
  }
  return out;
}

std::vector<int> parse_vertex_list(const std::string& text, int m) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 1 || v > m) throw std::invalid_argument("vertex label out of range: " + tok);
    if (std::find(out.begin(), out.end(), v - 1) != out.end())
      throw std::invalid_argument("repeated vertex label: " + tok);
    out.push_back(v - 1);
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  int m = 2;
  std::vector<int> d;
  std::string pspec;
  int max_entry = 6;
  int truncation = 30;
  bool gate_only = false;
  bool cross_check = false;
  int jobs = 1;
  std::string format = "table";
};

int run_classify(const ClassifyArgs& a) {
  if (a.m > 3)
    std::cerr << "warning: the filter suite is only validated for quivers with at most 3 vertices\n";
  std::vector<int> ds = a.d.empty() ? std::vector<int>{3, 4} : a.d;
  auto perms = perm_choices(a.pspec, a.m);

  qcy::ClassifyOptions opts;
  opts.gate_only = a.gate_only;
  opts.truncation = a.truncation;
  opts.cross_check_cyclotomic = a.cross_check;
  opts.jobs = a.jobs;
  opts.catalog = &shared_catalog();

  json runs = json::array();
  for (int d : ds) {
    for (const auto& [pname, P] : perms) {
      auto records = qcy::classify(a.m, d, P, a.max_entry, opts);
      int survivors = 0;
      for (const auto& r : records) survivors += r.survivor ? 1 : 0;
      if (a.format == "json") {
        json run;
        run["d"] = d;
        run["P_spec"] = pname;
        run["P"] = matrix_json(P);
        json rs = json::array();
        for (const auto& r : records) rs.push_back(record_json(r));
        run["records"] = std::move(rs);
        run["survivor_count"] = survivors;
        runs.push_back(std::move(run));
      } else {
        std::cout << "classify m=" << a.m << " d=" << d << " P=" << pname
                  << " max-entry=" << a.max_entry << (a.gate_only ? " (gate only)" : "") << "\n";
        for (const auto& r : records) {
          std::cout << "  ";
          print_record_line(std::cout, r);
        }
        std::cout << "  " << records.size() << " candidates up to canonical form, " << survivors
                  << (a.gate_only ? " gate passers" : " survivors") << "\n\n";
      }
    }
  }
  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "classify";
    out["m"] = a.m;
    out["max_entry"] = a.max_entry;
    out["gate_only"] = a.gate_only;
    out["truncation"] = a.truncation;
    out["runs"] = std::move(runs);
    emit(out, a.format);
  }
  return 0;
}

// -------------------------------------------------------------- check-type

struct CheckTypeArgs {
  std::string m_spec;
  std::string pspec = "id";
  int d = 3;
  int truncation = 30;
  std::string format = "table";
};

int run_check_type(const CheckTypeArgs& a) {
  IMat M = parse_matrix(a.m_spec);
  if (M.rows() != M.cols()) throw std::invalid_argument("incidence matrix must be square");
  IMat P = parse_perm(a.pspec, static_cast<int>(M.rows()));
  CYType t = qcy::make_type(M, P, a.d);

  qcy::ClassifyOptions opts;
  opts.truncation = a.truncation;
  opts.catalog = &shared_catalog();
  auto rec = qcy::check_type(t, opts);

  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "check-type";
    out["record"] = record_json(rec);
    emit(out, a.format);
  } else {
    std::cout << "check-type M=" << a.m_spec << " P=" << a.pspec << " d=" << a.d << "\n";
    for (const auto& v : rec.verdicts) {
      std::cout << "  " << v.filter;
      for (std::size_t pad = v.filter.size(); pad < 24; ++pad) std::cout << ' ';
      std::cout << status_name(v.status);
      if (!v.detail.empty()) std::cout << "  (" << v.detail << ")";
      std::cout << "\n";
    }
    std::cout << "verdict: ";
    print_record_line(std::cout, rec);
  }
  return 0;
}

// ------------------------------------------------------------------ sptest

struct SptestArgs {
  std::string file;
  int d = 3;
  std::string pspec = "id";
  int trials = 10;
  int degree = 8;
  std::uint64_t seed = 0;
  std::string restrict_spec;
  int jobs = 1;
  std::string format = "table";
};

struct SptestTrial {
  std::uint64_t seed = 0;
  bool match = false;
  std::optional<qcy::TrialMismatch> mismatch;
  IMat computed;   // restricted mode: counts at the final degree
  IMat predicted;  // restricted mode: predictive block at the final degree
};

// Restricted comparison: relations of the vertex-subset quotient are the
// projections of every ambient cyclic derivative; the quotient's certified
// dimension counts are compared entrywise against the ambient predictive
// series (an entry exceeding the prediction rules out the predicted series).
SptestTrial run_restricted_trial(const CYType& t, const qcy::Subquiver& sub,
                                 const qcy::MatrixSeries<std::int64_t>& predicted, int D,
                                 std::uint64_t seed) {
  SptestTrial out;
  out.seed = seed;
  auto omega = qcy::generic_superpotential(t.quiver, t.d, seed);
  std::vector<qcy::PathElement<qcy::Fp>> rels;
  for (int arr = 0; arr < t.quiver.arrow_count(); ++arr) {
    auto da = qcy::cyclic_derivative(omega, arr, t.quiver);
    auto pr = qcy::project_to_subquiver(sub, da);
    if (!pr.is_zero()) rels.push_back(std::move(pr));
  }
  qcy::TruncatedGB<qcy::Fp> gb(sub.quiver, qcy::MonomialOrder::standard(sub.quiver.arrow_count()),
                               rels, D);
  auto counts = gb.hilbert(D);

  int k = static_cast<int>(sub.vertices.size());
  out.match = true;
  for (int n = 0; n <= D && out.match; ++n)
    for (int i = 0; i < k && out.match; ++i)
      for (int j = 0; j < k; ++j) {
        std::int64_t actual = counts.at(n)(i, j);
        std::int64_t pred = predicted.at(n)(sub.vertices[static_cast<std::size_t>(i)],
                                            sub.vertices[static_cast<std::size_t>(j)]);
        if (actual > pred) {
          out.match = false;
          out.mismatch = qcy::TrialMismatch{n, sub.vertices[static_cast<std::size_t>(i)],
                                            sub.vertices[static_cast<std::size_t>(j)], pred, actual};
          break;
        }
      }
  out.computed = IMat::Zero(k, k);
  out.predicted = IMat::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out.computed(i, j) = counts.at(D)(i, j);
      out.predicted(i, j) = predicted.at(D)(sub.vertices[static_cast<std::size_t>(i)],
                                            sub.vertices[static_cast<std::size_t>(j)]);
    }
  return out;
}

int run_sptest(const SptestArgs& a) {
  IMat M = qcy::textio::load_matrix_file(a.file);
  if (M.rows() != M.cols()) throw std::invalid_argument("incidence matrix must be square");
  int m = static_cast<int>(M.rows());
  IMat P = parse_perm(a.pspec, m);
  if (!qcy::mat_eq(P, qcy::identity_imat(m)))
    throw std::invalid_argument("sptest needs the trivial Nakayama permutation");
  CYType t = qcy::make_type(M, P, a.d);

  std::optional<std::vector<int>> restrict_to;
  if (!a.restrict_spec.empty()) restrict_to = parse_vertex_list(a.restrict_spec, m);

  std::vector<SptestTrial> trials(static_cast<std::size_t>(a.trials));
  auto run_range = [&](int lo, int hi) {
    std::optional<qcy::Subquiver> sub;
    std::optional<qcy::MatrixSeries<std::int64_t>> predicted;
    if (restrict_to) {
      sub = qcy::full_subquiver(t.quiver, *restrict_to);
      predicted = qcy::invert_series(qcy::build_p(t), a.degree);
    }
    for (int i = lo; i < hi; ++i) {
      std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
      if (restrict_to) {
        trials[static_cast<std::size_t>(i)] = run_restricted_trial(t, *sub, *predicted, a.degree, seed);
      } else {
        auto omega = qcy::generic_superpotential(t.quiver, t.d, seed);
        auto r = qcy::superpotential_match(t, omega, a.degree);
        SptestTrial tr;
        tr.seed = seed;
        tr.match = r.match;
        tr.mismatch = r.first_mismatch;
        trials[static_cast<std::size_t>(i)] = std::move(tr);
      }
    }
  };
  int jobs = std::max(1, std::min(a.jobs, a.trials));
  if (jobs == 1) {
    run_range(0, a.trials);
  } else {
    std::vector<std::thread> pool;
    int chunk = (a.trials + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      int lo = w * chunk, hi = std::min(a.trials, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  int match_count = 0;
  for (const auto& tr : trials) match_count += tr.match ? 1 : 0;

  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "sptest";
    out["d"] = a.d;
    out["degree"] = a.degree;
    out["trials"] = a.trials;
    out["seed"] = a.seed;
    out["restrict"] = restrict_to ? json([&] {
      json v = json::array();
      for (int x : *restrict_to) v.push_back(x + 1);
      return v;
    }()) : json(nullptr);
    json results = json::array();
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& tr = trials[i];
      json r;
      r["trial"] = i;
      r["seed"] = tr.seed;
      r["match"] = tr.match;
      if (tr.mismatch) {
        json mm;
        mm["degree"] = tr.mismatch->degree;
        mm["i"] = tr.mismatch->i + 1;
        mm["j"] = tr.mismatch->j + 1;
        mm["predicted"] = tr.mismatch->predicted;
        mm["actual"] = tr.mismatch->actual;
        r["mismatch"] = std::move(mm);
      }
      if (restrict_to) {
        r["final_degree_counts"] = matrix_json(tr.computed);
        r["final_degree_predicted"] = matrix_json(tr.predicted);
      }
      results.push_back(std::move(r));
    }
    out["results"] = std::move(results);
    out["match_count"] = match_count;
    emit(out, a.format);
  } else {
    std::cout << "sptest " << a.file << " d=" << a.d << " degree=" << a.degree
              << " trials=" << a.trials;
    if (restrict_to) {
      std::cout << " restrict=";
      for (std::size_t i = 0; i < restrict_to->size(); ++i)
        std::cout << (i ? "," : "") << (*restrict_to)[i] + 1;
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& tr = trials[i];
      std::cout << "  trial " << i << " seed=" << tr.seed << ": ";
      if (tr.match) {
        std::cout << "match\n";
      } else if (tr.mismatch) {
        std::cout << "mismatch at degree " << tr.mismatch->degree << " entry ("
                  << tr.mismatch->i + 1 << "," << tr.mismatch->j + 1 << "): computed "
                  << tr.mismatch->actual << " vs predicted " << tr.mismatch->predicted << "\n";
      } else {
        std::cout << "mismatch\n";
      }
    }
    std::cout << match_count << "/" << a.trials << " trials match the predictive series to degree "
              << a.degree << "\n";
    if (restrict_to && !trials.empty()) {
      std::cout << "degree-" << a.degree << " counts (first trial):    "
                << matrix_to_string(trials.front().computed) << "\n";
      std::cout << "degree-" << a.degree << " predicted block:        "
                << matrix_to_string(trials.front().predicted) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------- mckay

struct MckayArgs {
  std::string group = "S3";
  std::string group_file;
  std::string rep;
  std::string format = "table";
};

const qcy::GroupData& builtin_group(const std::string& name) {
  static const qcy::GroupData z2 = qcy::GroupData::z2();
  static const qcy::GroupData z3 = qcy::GroupData::z3();
  static const qcy::GroupData s3 = qcy::GroupData::s3();
  static const qcy::GroupData big = qcy::GroupData::z6z6_semidirect();
  if (name == "Z2") return z2;
  if (name == "Z3") return z3;
  if (name == "S3") return s3;
  if (name == big.name) return big;
  throw std::invalid_argument("unknown group '" + name + "' (built in: Z2, Z3, S3, " + big.name + ")");
}

int run_mckay(const MckayArgs& a) {
  std::optional<qcy::GroupData> loaded;
  if (!a.group_file.empty()) loaded = qcy::group_from_json_file(a.group_file);
  const qcy::GroupData& g = loaded ? *loaded : builtin_group(a.group);

  qcy::Representation rho;
  std::istringstream in(a.rep);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int k = std::stoi(tok);
    if (k < 1 || k > static_cast<int>(g.characters.size()))
      throw std::invalid_argument("character index out of range: " + tok);
    rho.parts.push_back(k);
  }
  if (rho.parts.empty()) throw std::invalid_argument("--rep needs at least one character index");

  IMat M = qcy::mckay_matrix(g, rho);
  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "mckay";
    out["group"] = g.name;
    out["rep"] = rho.parts;
    out["M"] = matrix_json(M);
    emit(out, a.format);
  } else {
    std::cout << "mckay group=" << g.name << " rep=";
    for (std::size_t i = 0; i < rho.parts.size(); ++i)
      std::cout << (i ? "," : "") << g.character_names[static_cast<std::size_t>(rho.parts[i] - 1)];
    std::cout << "\nM = " << matrix_to_string(M) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ mutate

struct MutateArgs {
  bool markov = false;
  int depth = 3;
  std::string file;
  int vertex = 1;
  std::string format = "table";
};

int run_mutate(const MutateArgs& a) {
  if (a.markov) {
    auto triples = qcy::markov_tree(a.depth);
    if (a.format == "json") {
      json out;
      out["schema"] = 1;
      out["command"] = "mutate";
      out["depth"] = a.depth;
      json arr = json::array();
      for (const auto& t : triples) arr.push_back(json::array({t[0], t[1], t[2]}));
      out["triples"] = std::move(arr);
      emit(out, a.format);
    } else {
      std::cout << "Markov mutation tree to depth " << a.depth << " (" << triples.size()
                << " triples)\n";
      for (const auto& t : triples)
        std::cout << "  " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    return 0;
  }
  if (a.file.empty()) throw std::invalid_argument("mutate needs --markov or a quiver file");
  IMat M = qcy::textio::load_matrix_file(a.file);
  if (M.rows() != M.cols()) throw std::invalid_argument("incidence matrix must be square");
  qcy::Quiver q(M);
  if (a.vertex < 1 || a.vertex > q.vertex_count())
    throw std::invalid_argument("vertex out of range: " + std::to_string(a.vertex));
  auto res = qcy::mutate(q, a.vertex - 1);

  int kept = 0, composite = 0, reversed = 0;
  for (const auto& arr : res.arrows) {
    switch (arr.origin) {
      case qcy::ArrowOrigin::kept: ++kept; break;
      case qcy::ArrowOrigin::composite: ++composite; break;
      case qcy::ArrowOrigin::reversed: ++reversed; break;
    }
  }
  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "mutate";
    out["M"] = matrix_json(M);
    out["vertex"] = a.vertex;
    out["M_new"] = matrix_json(res.quiver.incidence());
    out["removed_two_cycles"] = res.removed_two_cycles.size();
    json origins;
    origins["kept"] = kept;
    origins["composite"] = composite;
    origins["reversed"] = reversed;
    out["origins"] = std::move(origins);
    emit(out, a.format);
  } else {
    std::cout << "mutate at vertex " << a.vertex << "\n";
    std::cout << "  M     = " << matrix_to_string(M) << "\n";
    std::cout << "  M_new = " << matrix_to_string(res.quiver.incidence()) << "\n";
    std::cout << "  arrows: " << kept << " kept, " << composite << " composite, " << reversed
              << " reversed; " << res.removed_two_cycles.size() << " two-cycles removed\n";
  }
  return 0;
}

// ----------------------------------------------------------------- hilbert

struct HilbertArgs {
  std::string m_spec;
  std::string pspec = "id";
  int d = 3;
  int N = 10;
  std::string format = "table";
};

int run_hilbert(const HilbertArgs& a) {
  if (a.N > 30) throw std::invalid_argument("series truncation is capped at 30");
  IMat M = parse_matrix(a.m_spec);
  if (M.rows() != M.cols()) throw std::invalid_argument("incidence matrix must be square");
  IMat P = parse_perm(a.pspec, static_cast<int>(M.rows()));
  CYType t = qcy::make_type(M, P, a.d);
  auto H = qcy::invert_series(qcy::build_p(t), a.N);

  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "hilbert";
    out["M"] = matrix_json(M);
    out["P"] = matrix_json(P);
    out["d"] = a.d;
    out["N"] = a.N;
    json hs = json::array();
    for (int n = 0; n <= a.N; ++n) {
      IMat h(M.rows(), M.cols());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = H.at(n)(i, j);
      hs.push_back(matrix_json(h));
    }
    out["H"] = std::move(hs);
    emit(out, a.format);
  } else {
    std::cout << "hilbert M=" << a.m_spec << " P=" << a.pspec << " d=" << a.d << "\n";
    for (int n = 0; n <= a.N; ++n) {
      IMat h(M.rows(), M.cols());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = H.at(n)(i, j);
      std::cout << "  H_" << n << " = " << matrix_to_string(h) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------- repro

struct ReproArgs {
  int max_entry = 6;
  int jobs = 1;
  std::string format = "table";
};

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string key_of(const IMat& M, const IMat& P, int d) {
  return qcy::catalog_key(qcy::canonicalize(qcy::make_type(M, P, d)), d);
}

// survivors of a classify sweep vs an expected reference list, compared up
// to canonical form, with the starred tags required to line up
ReproCheck compare_survivors(const std::string& name, int m, const std::vector<IMat>& perms,
                             const std::vector<qcy::reference::TypeEntry>& expected, int max_entry,
                             int jobs) {
  qcy::ClassifyOptions opts;
  opts.jobs = jobs;
  opts.catalog = &shared_catalog();

  std::map<std::string, bool> got;  // key -> starred
  for (int d : {3, 4})
    for (const auto& P : perms)
      for (const auto& r : qcy::classify(m, d, P, max_entry, opts))
        if (r.survivor) got[qcy::catalog_key(r.canon, r.d)] = r.realization == "starred";

  std::map<std::string, bool> want;
  for (const auto& e : expected) want[key_of(e.M, e.P, e.d)] = e.starred;

  ReproCheck out;
  out.name = name;
  if (got == want) {
    out.pass = true;
    out.detail = std::to_string(want.size()) + " types";
    return out;
  }
  std::string missing, extra, starred_off;
  for (const auto& [k, star] : want) {
    auto it = got.find(k);
    if (it == got.end())
      missing += " " + k;
    else if (it->second != star)
      starred_off += " " + k;
  }
  for (const auto& [k, star] : got)
    if (!want.count(k)) extra += " " + k;
  if (!missing.empty()) out.detail += "missing:" + missing + "; ";
  if (!extra.empty()) out.detail += "extra:" + extra + "; ";
  if (!starred_off.empty()) out.detail += "starred mismatch:" + starred_off;
  return out;
}

ReproCheck check_gamma_tables() {
  ReproCheck out{"gamma-tables", true, ""};
  int rows = 0;
  auto run = [&](const std::vector<qcy::reference::GammaRow>& table, int s) {
    for (const auto& row : table) {
      auto prof = qcy::diagonal_profile(row.diag[0], row.diag[1], row.diag[2], s);
      bool ok = prof.lambda == row.lambda && prof.beta == row.beta && prof.gamma_max &&
                *prof.gamma_max == row.gamma_max;
      if (!ok) {
        out.pass = false;
        out.detail += " (" + std::to_string(row.diag[0]) + "," + std::to_string(row.diag[1]) + "," +
                      std::to_string(row.diag[2]) + ")@s=" + std::to_string(s);
      }
      ++rows;
    }
  };
  run(qcy::reference::gamma_rows_d3(), 3);
  run(qcy::reference::gamma_rows_d4(), 4);
  if (out.pass) out.detail = std::to_string(rows) + " rows";
  return out;
}

ReproCheck check_mckay_rows() {
  ReproCheck out{"appendix-mckay", true, ""};
  int rows = 0;
  for (const auto& row : qcy::reference::mckay_rows()) {
    const auto& g = builtin_group(row.group);
    IMat M = qcy::mckay_matrix(g, qcy::Representation{row.parts});
    if (!qcy::mat_eq(M, row.M)) {
      out.pass = false;
      out.detail += " " + row.group + "[" + matrix_to_string(row.M) + "]";
    }
    ++rows;
  }
  if (out.pass) out.detail = std::to_string(rows) + " rows";
  return out;
}

ReproCheck check_skew_rows() {
  ReproCheck out{"skew-group-types", true, ""};
  int rows = 0;
  for (const auto& row : qcy::builtin_skew_rows()) {
    CYType t = qcy::skew_group_type(*row.group, row.rho, row.hdet_on_generators, row.d);
    bool ok = qcy::mat_eq(t.M(), row.expected_m) && qcy::mat_eq(t.P, row.expected_p) && t.d == row.d;
    if (ok) {
      // recompute hdet on the loop quiver carrying the omega
      int n = static_cast<int>(row.generator_matrices.front().size());
      IMat loop_m = IMat::Zero(1, 1);
      loop_m(0, 0) = n;
      qcy::Quiver lq(loop_m);
      for (std::size_t k = 0; k < row.generator_matrices.size() && ok; ++k) {
        auto amap = qcy::ArrowMap<qcy::CycQ>::on_loops(row.generator_matrices[k]);
        auto h = qcy::hdet_of(amap, row.omega, lq);
        if (!h || !(*h == row.hdet_on_generators[k])) ok = false;
      }
    }
    if (!ok) {
      out.pass = false;
      out.detail += " " + row.label;
    }
    ++rows;
  }
  if (out.pass) out.detail = std::to_string(rows) + " rows";
  return out;
}

ReproCheck check_eliminations() {
  ReproCheck out{"eliminations", true, ""};
  qcy::ClassifyOptions opts;
  opts.catalog = &shared_catalog();
  int rows = 0;
  for (const auto& e : qcy::reference::fixed_point_eliminations()) {
    CYType t = qcy::make_type(e.M, qcy::identity_imat(static_cast<int>(e.M.rows())), e.d);
    auto rec = qcy::check_type(t, opts);
    bool found = false;
    for (const auto& v : rec.verdicts)
      if (v.filter == e.filter && v.status == FilterStatus::fail) found = true;
    if (e.filter == "determinant-gate" && found)
      found = rec.gate.gk && *rec.gate.gk == 5;  // the one gate elimination in the list is the gk=5 case
    if (!found || rec.survivor) {
      out.pass = false;
      out.detail += " " + matrix_to_string(e.M) + "#" + e.filter;
    }
    ++rows;
  }
  if (out.pass) out.detail = std::to_string(rows) + " eliminations";
  return out;
}

ReproCheck check_markov_mutation() {
  ReproCheck out{"markov-mutation", true, ""};
  if (!qcy::markov_check(3, 3, 3) || !qcy::markov_check(3, 3, 6) || !qcy::markov_check(3, 6, 15))
    out.pass = false;
  for (const auto& t : qcy::markov_tree(4))
    if (t[0] * t[0] + t[1] * t[1] + t[2] * t[2] != t[0] * t[1] * t[2]) out.pass = false;

  // mutation sends the (3,3,6) triple quiver back to the (3,3,3) one
  IMat big(3, 3);
  big.setZero();
  big(0, 1) = 3;
  big(1, 2) = 3;
  big(2, 0) = 6;
  auto res = qcy::mutate(qcy::Quiver(big), 1);
  IMat small(3, 3);
  small.setZero();
  small(0, 1) = 3;
  small(1, 2) = 3;
  small(2, 0) = 3;
  if (key_of(res.quiver.incidence(), qcy::identity_imat(3), 3) !=
      key_of(small, qcy::identity_imat(3), 3))
    out.pass = false;
  out.detail = out.pass ? "tree depth 4 and mutation arithmetic" : "mismatch";
  return out;
}

int run_repro(const ReproArgs& a) {
  std::vector<ReproCheck> checks;
  IMat id2 = qcy::identity_imat(2), id3 = qcy::identity_imat(3);
  IMat swap2 = parse_perm("swap=1,2", 2);
  IMat swap23 = parse_perm("swap=2,3", 3);
  IMat cycle3 = parse_perm("cycle=1,2,3", 3);

  checks.push_back(compare_survivors("two-vertex-types", 2, {id2, swap2},
                                     qcy::reference::two_vertex_types(), a.max_entry, a.jobs));
  checks.push_back(compare_survivors("three-vertex-cycle-types", 3, {cycle3},
                                     qcy::reference::three_vertex_cycle_types(), a.max_entry, a.jobs));
  checks.push_back(compare_survivors("three-vertex-swap-types", 3, {swap23},
                                     qcy::reference::three_vertex_swap_types(), a.max_entry, a.jobs));
  checks.push_back(compare_survivors("three-vertex-fixed-types", 3, {id3},
                                     qcy::reference::three_vertex_fixed_types(a.max_entry),
                                     a.max_entry, a.jobs));
  checks.push_back(check_gamma_tables());
  checks.push_back(check_mckay_rows());
  checks.push_back(check_skew_rows());
  checks.push_back(check_eliminations());
  checks.push_back(check_markov_mutation());

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  if (a.format == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "repro";
    json arr = json::array();
    for (const auto& c : checks) {
      json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    out["checks"] = std::move(arr);
    out["pass"] = all;
    emit(out, a.format);
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      for (std::size_t pad = c.name.size(); pad < 28; ++pad) std::cout << ' ';
      std::cout << c.detail << "\n";
    }
    std::cout << (all ? "repro: all checks passed\n" : "repro: FAILURES above\n");
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for graded twisted Calabi-Yau quiver algebras"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "enumerate and filter candidate types");
  classify->add_option("-m,--vertices", ca.m, "number of vertices")->required()->check(CLI::PositiveNumber);
  classify->add_option("-d,--degree", ca.d, "superpotential degree (repeatable; default 3 and 4)")
      ->check(CLI::Range(3, 32));
  classify->add_option("-P,--nakayama", ca.pspec, "id, swap=i,j or cycle=i,j,k (default: all classes)");
  classify->add_option("--max-entry", ca.max_entry, "entry bound for enumeration")->check(CLI::PositiveNumber);
  classify->add_option("--truncation", ca.truncation, "series truncation degree")->check(CLI::PositiveNumber);
  classify->add_flag("--gate-only", ca.gate_only, "determinant gate only, skip the filter cascade");
  classify->add_flag("--cross-check-cyclotomic", ca.cross_check,
                     "assert survivor determinants against the direct enumeration");
  classify->add_option("--jobs", ca.jobs, "worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--format", ca.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  CheckTypeArgs cta;
  auto* check = app.add_subcommand("check-type", "run the filter cascade on one type");
  check->add_option("M", cta.m_spec, "incidence matrix, row-slash notation")->required();
  check->add_option("P", cta.pspec, "id, swap=i,j or cycle=i,j,k");
  check->add_option("d", cta.d, "superpotential degree")->check(CLI::Range(3, 32));
  check->add_option("--truncation", cta.truncation, "series truncation degree")->check(CLI::PositiveNumber);
  check->add_option("--format", cta.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  SptestArgs sa;
  auto* sptest = app.add_subcommand("sptest", "generic-superpotential series comparison");
  sptest->add_option("quiver-file", sa.file, "file with the incidence matrix")->required();
  sptest->add_option("-d,--degree-sp", sa.d, "superpotential degree")->check(CLI::Range(3, 32));
  sptest->add_option("-P,--nakayama", sa.pspec, "Nakayama permutation (must be id)");
  sptest->add_option("--trials", sa.trials, "number of random superpotentials")->check(CLI::PositiveNumber);
  sptest->add_option("-D,--truncation", sa.degree, "compare series to this degree")->check(CLI::PositiveNumber);
  sptest->add_option("--seed", sa.seed, "base random seed");
  sptest->add_option("--restrict", sa.restrict_spec, "comma-separated vertex subset, 1-based");
  sptest->add_option("--jobs", sa.jobs, "worker threads")->check(CLI::PositiveNumber);
  sptest->add_option("--format", sa.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  MckayArgs ma;
  auto* mckay = app.add_subcommand("mckay", "McKay incidence matrix of a representation");
  mckay->add_option("-g,--group", ma.group, "built-in group name (Z2, Z3, S3, ...)");
  mckay->add_option("--group-file", ma.group_file, "JSON file with a character table");
  mckay->add_option("--rep", ma.rep, "comma-separated 1-based character indices")->required();
  mckay->add_option("--format", ma.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  MutateArgs mua;
  auto* mutate = app.add_subcommand("mutate", "quiver mutation at a vertex");
  mutate->add_flag("--markov", mua.markov, "walk the Markov mutation tree instead");
  mutate->add_option("--depth", mua.depth, "Markov tree depth")->check(CLI::NonNegativeNumber);
  mutate->add_option("quiver-file", mua.file, "file with the incidence matrix");
  mutate->add_option("-v,--vertex", mua.vertex, "mutation vertex, 1-based")->check(CLI::PositiveNumber);
  mutate->add_option("--format", mua.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  HilbertArgs ha;
  auto* hilbert = app.add_subcommand("hilbert", "predictive series H = p^{-1}");
  hilbert->add_option("M", ha.m_spec, "incidence matrix, row-slash notation")->required();
  hilbert->add_option("P", ha.pspec, "id, swap=i,j or cycle=i,j,k");
  hilbert->add_option("d", ha.d, "superpotential degree")->check(CLI::Range(3, 32));
  hilbert->add_option("-N,--truncation", ha.N, "series truncation degree (max 30)")->check(CLI::PositiveNumber);
  hilbert->add_option("--format", ha.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  ReproArgs ra;
  auto* repro = app.add_subcommand("repro", "validate against the built-in reference lists");
  repro->add_option("--max-entry", ra.max_entry, "entry bound for the enumeration sweeps")
      ->check(CLI::PositiveNumber);
  repro->add_option("--jobs", ra.jobs, "worker threads")->check(CLI::PositiveNumber);
  repro->add_option("--format", ra.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(ca);
    if (app.got_subcommand(check)) return run_check_type(cta);
    if (app.got_subcommand(sptest)) return run_sptest(sa);
    if (app.got_subcommand(mckay)) return run_mckay(ma);
    if (app.got_subcommand(mutate)) return run_mutate(mua);
    if (app.got_subcommand(hilbert)) return run_hilbert(ha);
    if (app.got_subcommand(repro)) return run_repro(ra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
