// cgf: command-line surface for the cyclotomic generating function toolkit.
//
// Subcommands: check, forms, coeffs, cumulants, moments, charfun, diagnose,
// scan, family, oracle, enumerate, generators, conjecture, graphpath.
//
// Exit codes: 0 success; 2 for mathematically negative answers (not a CGF,
// not a polynomial, negative coefficients) so pipelines can branch on
// CGF-ness; 1 for usage or internal errors.
//
// All regular output goes to stdout, diagnostics to stderr. Floats are
// printed with 12 significant digits, exact rationals as "p/q". If the
// environment variable CGF_CYCLO_CACHE names a directory, the cyclotomic
// memo cache is loaded from <dir>/cyclotomics.json at startup and saved
// back on exit.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgf/asymptotics.hpp"
#include "cgf/cyclotomic.hpp"
#include "cgf/families.hpp"
#include "cgf/forms.hpp"
#include "cgf/monoids.hpp"
#include "cgf/stats.hpp"
#include "cgf/text.hpp"
#include "json.hpp"

namespace {

using cgf::Int;
using cgf::IntPoly;
using cgf::Rat;
using cgf::RationalForm;
using json = nlohmann::ordered_json;

constexpr int kExitNegative = 2;

std::string jfloat(double x) { return cgf::double_to_string(x); }

json indices_json(const std::vector<long>& v) {
  json arr = json::array();
  for (long x : v) arr.push_back(x);
  return arr;
}

std::string cyclo_pretty(const cgf::CycloForm& form) {
  std::string out;
  if (form.alpha != 1) out += form.alpha.str();
  if (form.beta != 0) {
    if (!out.empty()) out += " ";
    out += "q^" + std::to_string(form.beta);
  }
  std::vector<long> idx = form.indices;
  std::sort(idx.begin(), idx.end());
  for (size_t i = 0; i < idx.size();) {
    size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    if (!out.empty()) out += " ";
    out += "Phi_" + std::to_string(idx[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  if (out.empty()) out = "1";
  return out;
}

std::string rational_pretty(const RationalForm& rf) {
  auto side = [](const std::vector<long>& v) {
    std::string s;
    std::vector<long> sorted = v;
    std::sort(sorted.rbegin(), sorted.rend());
    for (long x : sorted) s += "[" + std::to_string(x) + "]";
    return s.empty() ? std::string("1") : s;
  };
  std::string out;
  if (rf.alpha != 1) out += rf.alpha.str() + " ";
  if (rf.beta != 0) out += "q^" + std::to_string(rf.beta) + " ";
  out += side(rf.numer);
  if (!rf.denom.empty()) out += " / " + side(rf.denom);
  return out;
}

void print_poly(const IntPoly& p, const std::string& format, long beta_note) {
  (void)beta_note;
  if (format == "json") {
    json out;
    out["degree"] = p.is_zero() ? -1 : p.degree();
    json coeffs = json::array();
    for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).str());
    out["coeffs"] = coeffs;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "k,coeff\n";
    for (long k = 0; k <= p.degree(); ++k)
      std::cout << k << "," << p.coeff(k).str() << "\n";
  } else if (format == "bfile") {
    for (long k = 0; k <= p.degree(); ++k)
      std::cout << k << " " << p.coeff(k).str() << "\n";
  } else {
    std::cout << cgf::poly_to_string(p) << "\n";
  }
}

// Shared failure report for rational forms that do not expand to a CGF.
int report_expand_failure(const cgf::ExpandResult& res,
                          const std::string& format) {
  const char* reason = res.status == cgf::ExpandStatus::NotPolynomial
                           ? "NotPolynomial"
                           : "NotNonnegative";
  if (format == "json") {
    json out;
    out["is_cgf"] = false;
    out["reason"] = reason;
    if (res.status == cgf::ExpandStatus::NotPolynomial) {
      out["witness"] = res.witness;
    } else {
      out["expansion"] = cgf::poly_to_string(res.poly);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "is_cgf: false\n";
    std::cout << "reason: " << reason << "\n";
    if (res.status == cgf::ExpandStatus::NotPolynomial)
      std::cout << "witness: " << res.witness << "\n";
    else
      std::cout << "expansion: " << cgf::poly_to_string(res.poly) << "\n";
  }
  return kExitNegative;
}

int report_check_failure(const cgf::CgfCheckResult& res,
                         const std::string& format) {
  const char* reason = res.reason == cgf::CgfFailure::NegativeCoefficient
                           ? "NegativeCoefficient"
                           : "NonCyclotomicResidue";
  if (format == "json") {
    json out;
    out["is_cgf"] = false;
    out["reason"] = reason;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "is_cgf: false\n";
    std::cout << "reason: " << reason << "\n";
  }
  return kExitNegative;
}

// Parses exactly one of --poly / --ratform into an expanded polynomial.
// On failure prints the negative report and sets rc.
struct PolyInput {
  IntPoly poly;
  bool from_ratform = false;
  RationalForm rf;
};

bool resolve_poly_input(const std::string& poly_str,
                        const std::string& ratform_str, long beta,
                        const std::string& format, PolyInput& out, int& rc) {
  if (poly_str.empty() == ratform_str.empty())
    throw std::invalid_argument("provide exactly one of --poly / --ratform");
  if (!poly_str.empty()) {
    out.poly = cgf::parse_poly(poly_str);
    out.from_ratform = false;
    return true;
  }
  out.rf = cgf::parse_ratform(ratform_str);
  out.rf.beta += beta;
  out.from_ratform = true;
  cgf::ExpandResult res = cgf::rational_to_poly(out.rf);
  if (res.status != cgf::ExpandStatus::Polynomial) {
    rc = report_expand_failure(res, format);
    return false;
  }
  out.poly = res.poly;
  return true;
}

int run_check(const std::string& poly_str, const std::string& ratform_str,
              const std::string& format) {
  PolyInput in;
  int rc = 0;
  if (!resolve_poly_input(poly_str, ratform_str, 0, format, in, rc)) return rc;
  cgf::CgfCheckResult res = cgf::cgf_check(in.poly);
  if (!res.is_cgf) return report_check_failure(res, format);
  if (format == "json") {
    json out;
    out["is_cgf"] = true;
    out["alpha"] = res.form.alpha.str();
    out["beta"] = res.form.beta;
    out["indices"] = indices_json(res.form.indices);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "is_cgf: true\n";
    std::cout << "alpha: " << res.form.alpha.str() << "\n";
    std::cout << "beta: " << res.form.beta << "\n";
    std::cout << "cyclotomic: " << cyclo_pretty(res.form) << "\n";
  }
  return 0;
}

int run_forms(const std::string& poly_str, const std::string& ratform_str,
              const std::string& format) {
  PolyInput in;
  int rc = 0;
  if (!resolve_poly_input(poly_str, ratform_str, 0, format, in, rc)) return rc;
  cgf::CgfCheckResult res = cgf::cgf_check(in.poly);
  if (!res.is_cgf) return report_check_failure(res, format);
  RationalForm rf = cgf::cyclo_to_rational(res.form);
  if (format == "json") {
    json out;
    out["alpha"] = res.form.alpha.str();
    out["beta"] = res.form.beta;
    out["indices"] = indices_json(res.form.indices);
    out["cyclotomic"] = cyclo_pretty(res.form);
    out["numer"] = indices_json(rf.numer);
    out["denom"] = indices_json(rf.denom);
    out["rational"] = rational_pretty(rf);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cyclotomic: " << cyclo_pretty(res.form) << "\n";
    std::cout << "rational: " << rational_pretty(rf) << "\n";
  }
  return 0;
}

int run_coeffs(const std::string& ratform_str, long beta, long single_k,
               bool has_single_k, const std::string& format) {
  RationalForm rf = cgf::parse_ratform(ratform_str);
  rf.beta += beta;
  if (has_single_k) {
    Int c = cgf::coeff_via_partitions(rf, single_k);
    if (format == "json") {
      json out;
      out["k"] = single_k;
      out["coeff"] = c.str();
      std::cout << out.dump(2) << "\n";
    } else if (format == "bfile") {
      std::cout << single_k << " " << c.str() << "\n";
    } else if (format == "csv") {
      std::cout << "k,coeff\n" << single_k << "," << c.str() << "\n";
    } else {
      std::cout << c.str() << "\n";
    }
    return 0;
  }
  cgf::ExpandResult res = cgf::rational_to_poly(rf);
  if (res.status != cgf::ExpandStatus::Polynomial)
    return report_expand_failure(res, format);
  print_poly(res.poly, format, rf.beta);
  return 0;
}

// Rational forms for cumulant/moment commands: either given directly or
// derived from a polynomial through its cyclotomic factorization.
bool resolve_ratform_input(const std::string& poly_str,
                           const std::string& ratform_str, long beta,
                           const std::string& format, RationalForm& rf,
                           int& rc) {
  if (poly_str.empty() == ratform_str.empty())
    throw std::invalid_argument("provide exactly one of --poly / --ratform");
  if (!ratform_str.empty()) {
    rf = cgf::parse_ratform(ratform_str);
    rf.beta += beta;
    return true;
  }
  IntPoly p = cgf::parse_poly(poly_str);
  cgf::CgfCheckResult res = cgf::cgf_check(p);
  if (!res.is_cgf) {
    rc = report_check_failure(res, format);
    return false;
  }
  rf = cgf::cyclo_to_rational(res.form);
  return true;
}

void print_rat_rows(const std::vector<std::pair<int, Rat>>& rows,
                    const char* key, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& [d, v] : rows) {
      json row;
      row["d"] = d;
      row["num"] = Int(boost::multiprecision::numerator(v)).str();
      row["den"] = Int(boost::multiprecision::denominator(v)).str();
      row["float"] = jfloat(v.convert_to<double>());
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "d,num,den,float\n";
    for (const auto& [d, v] : rows)
      std::cout << d << "," << Int(boost::multiprecision::numerator(v)).str()
                << "," << Int(boost::multiprecision::denominator(v)).str()
                << "," << jfloat(v.convert_to<double>()) << "\n";
  } else {
    for (const auto& [d, v] : rows)
      std::cout << key << "_" << d << " = " << cgf::rat_to_string(v) << " ("
                << jfloat(v.convert_to<double>()) << ")\n";
  }
}

int run_cumulants(const std::string& poly_str, const std::string& ratform_str,
                  long beta, int max_d, const std::string& format) {
  RationalForm rf;
  int rc = 0;
  if (!resolve_ratform_input(poly_str, ratform_str, beta, format, rf, rc))
    return rc;
  std::vector<std::pair<int, Rat>> rows;
  for (int d = 1; d <= max_d; ++d) rows.emplace_back(d, cgf::cumulant(rf, d));
  print_rat_rows(rows, "kappa", format);
  return 0;
}

int run_moments(const std::string& poly_str, const std::string& ratform_str,
                long beta, int max_d, bool central,
                const std::string& format) {
  RationalForm rf;
  int rc = 0;
  if (!resolve_ratform_input(poly_str, ratform_str, beta, format, rf, rc))
    return rc;
  std::vector<std::pair<int, Rat>> rows;
  for (int d = 1; d <= max_d; ++d)
    rows.emplace_back(
        d, central ? cgf::central_moment(rf, d) : cgf::moment(rf, d));
  print_rat_rows(rows, central ? "mu_c" : "mu", format);
  return 0;
}

int run_charfun(const std::string& poly_str, const std::string& ratform_str,
                double tmin, double tmax, int steps, bool standardized,
                const std::string& format) {
  PolyInput in;
  int rc = 0;
  if (!resolve_poly_input(poly_str, ratform_str, 0, format, in, rc)) return rc;
  std::vector<std::array<double, 5>> rows;
  for (int i = 0; i <= steps; ++i) {
    double t = steps == 0 ? tmin : tmin + (tmax - tmin) * i / steps;
    std::complex<double> phi = cgf::charfun_eval(in.poly, t, standardized);
    rows.push_back({t, phi.real(), phi.imag(), std::abs(phi),
                    std::exp(-t * t / 2)});
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json row;
      row["t"] = jfloat(r[0]);
      row["re"] = jfloat(r[1]);
      row["im"] = jfloat(r[2]);
      row["abs"] = jfloat(r[3]);
      row["normal_re"] = jfloat(r[4]);
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "t,re,im,abs,normal_re\n";
    for (const auto& r : rows) {
      std::cout << jfloat(r[0]);
      for (int j = 1; j < 5; ++j) std::cout << "," << jfloat(r[j]);
      std::cout << "\n";
    }
  }
  return 0;
}

void print_diagnostics_fields(const cgf::Diagnostics& d, json& out) {
  out["ratio"] = jfloat(d.ratio);
  out["quartic"] = jfloat(d.quartic);
  out["std_k3"] = jfloat(d.std_k3);
  out["std_k4"] = jfloat(d.std_k4);
  out["ms_bound"] = jfloat(d.ms_bound);
  out["sigma"] = jfloat(d.sigma);
  out["mu"] = jfloat(d.mu);
}

int run_diagnose(const std::string& ratform_str, long beta,
                 const std::string& format) {
  RationalForm rf = cgf::parse_ratform(ratform_str);
  rf.beta += beta;
  cgf::Diagnostics d = cgf::diaconis_diagnostics(rf);
  if (format == "json") {
    json out;
    print_diagnostics_fields(d, out);
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "ratio,quartic,std_k3,std_k4,ms_bound,sigma,mu\n";
    std::cout << jfloat(d.ratio) << "," << jfloat(d.quartic) << ","
              << jfloat(d.std_k3) << "," << jfloat(d.std_k4) << ","
              << jfloat(d.ms_bound) << "," << jfloat(d.sigma) << ","
              << jfloat(d.mu) << "\n";
  } else {
    std::cout << "ratio = " << jfloat(d.ratio) << "\n";
    std::cout << "quartic = " << jfloat(d.quartic) << "\n";
    std::cout << "std_k3 = " << jfloat(d.std_k3) << "\n";
    std::cout << "std_k4 = " << jfloat(d.std_k4) << "\n";
    std::cout << "ms_bound = " << jfloat(d.ms_bound) << "\n";
    std::cout << "sigma = " << jfloat(d.sigma) << "\n";
    std::cout << "mu = " << jfloat(d.mu) << "\n";
  }
  return 0;
}

cgf::ScanPoint scan_point(const std::string& family_name, long n) {
  cgf::ScanPoint pt;
  pt.label = n;
  if (family_name == "qbinomial") {
    pt.rf = cgf::qbinomial(2 * n, n);
  } else if (family_name == "macmahon") {
    pt.rf = cgf::macmahon_box(n, n, n);
  } else if (family_name == "qfactorial") {
    pt.rf = cgf::qfactorial(n);
  } else if (family_name == "qcatalan") {
    pt.rf = cgf::qcatalan(n);
  } else {
    throw std::invalid_argument("scan: unknown family " + family_name);
  }
  return pt;
}

int run_scan(const std::string& family_name, const std::string& points_str,
             double ratio_max, double quartic_min, const std::string& format) {
  cgf::MultisetSeq seq;
  seq.label = family_name;
  for (long n : cgf::parse_long_list(points_str))
    seq.points.push_back(scan_point(family_name, n));
  cgf::ScanThresholds thresholds{ratio_max, quartic_min};
  cgf::ScanReport rep = cgf::normality_scan(seq, thresholds);
  if (format == "json") {
    json out;
    out["label"] = seq.label;
    json table = json::array();
    for (const auto& [n, d] : rep.table) {
      json row;
      row["N"] = n;
      print_diagnostics_fields(d, row);
      table.push_back(row);
    }
    out["table"] = table;
    out["ratio_ok"] = rep.ratio_ok;
    out["quartic_increasing"] = rep.quartic_increasing;
    out["quartic_min_ok"] = rep.quartic_min_ok;
    out["std_k4_decreasing"] = rep.std_k4_decreasing;
    out["eventually_constant"] = rep.eventually_constant;
    out["verdict"] = rep.verdict;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "N,ratio,quartic,std_k3,std_k4,ms_bound,sigma,mu\n";
    for (const auto& [n, d] : rep.table)
      std::cout << n << "," << jfloat(d.ratio) << "," << jfloat(d.quartic)
                << "," << jfloat(d.std_k3) << "," << jfloat(d.std_k4) << ","
                << jfloat(d.ms_bound) << "," << jfloat(d.sigma) << ","
                << jfloat(d.mu) << "\n";
    std::cout << "# verdict: " << rep.verdict << "\n";
  } else {
    for (const auto& [n, d] : rep.table)
      std::cout << "N=" << n << " ratio=" << jfloat(d.ratio)
                << " quartic=" << jfloat(d.quartic)
                << " std_k4=" << jfloat(d.std_k4) << "\n";
    std::cout << "verdict: " << rep.verdict << "\n";
  }
  return 0;
}

int run_family(const std::string& name, const std::string& params_str,
               const std::string& partition_str, const std::string& format) {
  RationalForm rf;
  if (name == "hook") {
    rf = cgf::hook_cgf(cgf::parse_partition(partition_str));
  } else {
    rf = cgf::family(name, cgf::parse_long_list(params_str));
  }
  cgf::ExpandResult res = cgf::rational_to_poly(rf);
  if (res.status != cgf::ExpandStatus::Polynomial)
    return report_expand_failure(res, format);
  if (format == "json") {
    json out;
    out["name"] = name;
    out["numer"] = indices_json(rf.numer);
    out["denom"] = indices_json(rf.denom);
    out["beta"] = rf.beta;
    out["poly"] = cgf::poly_to_string(res.poly);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "rational: " << rational_pretty(rf) << "\n";
    std::cout << "poly: " << cgf::poly_to_string(res.poly) << "\n";
  }
  return 0;
}

int run_oracle(const std::string& kind, const std::string& params_str,
               const std::string& partition_str, const std::string& format) {
  IntPoly p;
  if (kind == "plane_partitions") {
    std::vector<long> v = cgf::parse_long_list(params_str);
    if (v.size() != 3)
      throw std::invalid_argument("oracle plane_partitions needs x,y,z");
    p = cgf::oracle_plane_partitions(v[0], v[1], v[2]);
  } else if (kind == "syt_maj") {
    p = cgf::oracle_syt_maj(cgf::parse_partition(partition_str));
  } else if (kind == "box_partitions") {
    std::vector<long> v = cgf::parse_long_list(params_str);
    if (v.size() != 2)
      throw std::invalid_argument("oracle box_partitions needs n,k");
    p = cgf::oracle_box_partitions(v[0], v[1]);
  } else {
    throw std::invalid_argument("oracle: unknown kind " + kind);
  }
  print_poly(p, format, 0);
  return 0;
}

int run_enumerate(const std::string& class_name, int max_degree, int threads,
                  bool with_generators, const std::string& format) {
  cgf::MonoidClass cls = cgf::class_from_name(class_name);
  cgf::MonoidTable table(max_degree, threads);
  if (format == "bfile") {
    for (int n = 1; n <= max_degree; ++n)
      std::cout << n << " " << table.count(cls, n) << "\n";
  } else if (format == "csv") {
    std::cout << "degree,count\n";
    for (int n = 1; n <= max_degree; ++n)
      std::cout << n << "," << table.count(cls, n) << "\n";
  } else if (format == "json") {
    json arr = json::array();
    for (int n = 1; n <= max_degree; ++n) {
      json rec;
      rec["degree"] = n;
      rec["count"] = table.count(cls, n);
      json elems = json::array();
      for (const auto& ms : table.elements(cls, n))
        elems.push_back(indices_json(ms));
      rec["elements"] = elems;
      if (with_generators) {
        json gens = json::array();
        for (const auto& ms : table.generators(cls, n))
          gens.push_back(indices_json(ms));
        rec["generators"] = gens;
      }
      arr.push_back(rec);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (int n = 1; n <= max_degree; ++n) {
      std::cout << "degree " << n << ": " << table.count(cls, n)
                << " elements\n";
      for (const auto& ms : table.elements(cls, n)) {
        std::cout << " ";
        for (long i : ms) std::cout << " " << i;
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_generators(const std::string& class_name, int max_degree, int threads,
                   const std::string& format) {
  cgf::MonoidClass cls = cgf::class_from_name(class_name);
  cgf::MonoidTable table(max_degree, threads);
  if (format == "bfile") {
    for (int n = 1; n <= max_degree; ++n)
      std::cout << n << " " << table.generator_count(cls, n) << "\n";
  } else if (format == "csv") {
    std::cout << "degree,generator_count\n";
    for (int n = 1; n <= max_degree; ++n)
      std::cout << n << "," << table.generator_count(cls, n) << "\n";
  } else if (format == "json") {
    json arr = json::array();
    for (int n = 1; n <= max_degree; ++n) {
      json rec;
      rec["degree"] = n;
      rec["count"] = table.generator_count(cls, n);
      json gens = json::array();
      for (const auto& ms : table.generators(cls, n))
        gens.push_back(indices_json(ms));
      rec["generators"] = gens;
      arr.push_back(rec);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (int n = 1; n <= max_degree; ++n) {
      std::cout << "degree " << n << ": " << table.generator_count(cls, n)
                << " generators\n";
      for (const auto& ms : table.generators(cls, n)) {
        std::cout << " ";
        for (long i : ms) std::cout << " " << i;
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_conjecture(const std::string& which, int max_degree, int threads,
                   const std::string& format) {
  cgf::ConjectureReport rep = cgf::conjecture_scan(which, max_degree, threads);
  if (format == "json") {
    json out;
    out["which"] = which;
    out["max_degree"] = max_degree;
    if (which == "nongale_count") {
      json counts = json::array();
      for (const auto& [n, c] : rep.degree_counts) {
        json row;
        row["degree"] = n;
        row["count"] = c;
        counts.push_back(row);
      }
      out["counts"] = counts;
    } else {
      out["violation_count"] = rep.violations.size();
      json v = json::array();
      for (const auto& ms : rep.violations) v.push_back(indices_json(ms));
      out["violations"] = v;
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    if (which == "nongale_count") {
      std::cout << "degree,count\n";
      for (const auto& [n, c] : rep.degree_counts)
        std::cout << n << "," << c << "\n";
    } else {
      std::cout << "violations\n" << rep.violations.size() << "\n";
    }
  } else {
    if (which == "nongale_count") {
      for (const auto& [n, c] : rep.degree_counts)
        std::cout << "degree " << n << ": " << c << "\n";
    } else if (rep.violations.empty()) {
      std::cout << "no violations up to degree " << max_degree << "\n";
    } else {
      std::cout << rep.violations.size() << " violations\n";
      for (const auto& ms : rep.violations) {
        std::cout << " ";
        for (long i : ms) std::cout << " " << i;
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_graphpath(const std::string& b_str, const std::string& a_str,
                  const std::string& a2_str, const std::string& format) {
  std::vector<long> B = cgf::parse_long_list(b_str);
  std::vector<long> A = cgf::parse_long_list(a_str);
  std::vector<long> A2 = cgf::parse_long_list(a2_str);
  auto endpoint_ok = [&B](const std::vector<long>& v) {
    RationalForm rf;
    rf.numer = v;
    rf.denom = B;
    return cgf::rational_to_poly(rf).status == cgf::ExpandStatus::Polynomial;
  };
  if (!endpoint_ok(A) || !endpoint_ok(A2)) {
    if (format == "json") {
      json out;
      out["is_cgf"] = false;
      out["reason"] = "NotCgfEndpoint";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "is_cgf: false\nreason: NotCgfEndpoint\n";
    }
    return kExitNegative;
  }
  std::vector<std::vector<long>> path = cgf::cgf_graph_path(B, A, A2);
  if (format == "json") {
    json out;
    out["denominator"] = indices_json(B);
    json steps = json::array();
    for (const auto& v : path) steps.push_back(indices_json(v));
    out["path"] = steps;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : path) {
      for (size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << v[i];
      std::cout << "\n";
    }
  }
  return 0;
}

std::string cache_file_path() {
  const char* dir = std::getenv("CGF_CYCLO_CACHE");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/cyclotomics.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for cyclotomic generating functions"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  int rc = 0;

  // check
  std::string chk_poly, chk_rat, chk_fmt = "json";
  auto* chk = app.add_subcommand(
      "check", "Test whether a polynomial or rational form is a CGF");
  chk->add_option("--poly", chk_poly, "Coefficients c0,c1,...");
  chk->add_option("--ratform", chk_rat, "Numerator/denominator a,b,../c,d,..");
  chk->add_option("--format", chk_fmt)
      ->check(CLI::IsMember({"json", "text"}));
  chk->callback([&] { rc = run_check(chk_poly, chk_rat, chk_fmt); });

  // forms
  std::string frm_poly, frm_rat, frm_fmt = "json";
  auto* frm = app.add_subcommand(
      "forms", "Print the cyclotomic and rational canonical forms");
  frm->add_option("--poly", frm_poly, "Coefficients c0,c1,...");
  frm->add_option("--ratform", frm_rat, "Numerator/denominator");
  frm->add_option("--format", frm_fmt)
      ->check(CLI::IsMember({"json", "text"}));
  frm->callback([&] { rc = run_forms(frm_poly, frm_rat, frm_fmt); });

  // coeffs
  std::string cf_rat, cf_fmt = "json";
  long cf_beta = 0, cf_k = 0;
  auto* cf = app.add_subcommand(
      "coeffs", "Expand a rational form into coefficients");
  cf->add_option("--ratform", cf_rat, "Numerator/denominator")->required();
  cf->add_option("--beta", cf_beta, "Extra power of q");
  auto* cf_kopt =
      cf->add_option("--k", cf_k, "Single coefficient via partition counting");
  cf->add_option("--format", cf_fmt)
      ->check(CLI::IsMember({"json", "csv", "bfile", "text"}));
  cf->callback([&] {
    rc = run_coeffs(cf_rat, cf_beta, cf_k, cf_kopt->count() > 0, cf_fmt);
  });

  // cumulants
  std::string cu_poly, cu_rat, cu_fmt = "json";
  long cu_beta = 0;
  int cu_maxd = 8;
  auto* cu = app.add_subcommand("cumulants", "Exact cumulants kappa_1..D");
  cu->add_option("--poly", cu_poly, "Coefficients c0,c1,...");
  cu->add_option("--ratform", cu_rat, "Numerator/denominator");
  cu->add_option("--beta", cu_beta, "Extra power of q (ratform input)");
  cu->add_option("--max-d", cu_maxd, "Largest order")->check(CLI::Range(1, 64));
  cu->add_option("--format", cu_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cu->callback(
      [&] { rc = run_cumulants(cu_poly, cu_rat, cu_beta, cu_maxd, cu_fmt); });

  // moments
  std::string mo_poly, mo_rat, mo_fmt = "json";
  long mo_beta = 0;
  int mo_maxd = 8;
  bool mo_central = false;
  auto* mo = app.add_subcommand("moments", "Exact raw or central moments");
  mo->add_option("--poly", mo_poly, "Coefficients c0,c1,...");
  mo->add_option("--ratform", mo_rat, "Numerator/denominator");
  mo->add_option("--beta", mo_beta, "Extra power of q (ratform input)");
  mo->add_option("--max-d", mo_maxd, "Largest order")->check(CLI::Range(1, 30));
  mo->add_flag("--central", mo_central, "Central moments about the mean");
  mo->add_option("--format", mo_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  mo->callback([&] {
    rc = run_moments(mo_poly, mo_rat, mo_beta, mo_maxd, mo_central, mo_fmt);
  });

  // charfun
  std::string ch_poly, ch_rat, ch_fmt = "csv";
  double ch_tmin = 0.0, ch_tmax = 6.283185307179586;
  int ch_steps = 64;
  bool ch_std = false;
  auto* ch = app.add_subcommand(
      "charfun", "Characteristic function values on a t-grid");
  ch->add_option("--poly", ch_poly, "Coefficients c0,c1,...");
  ch->add_option("--ratform", ch_rat, "Numerator/denominator");
  ch->add_option("--tmin", ch_tmin, "Grid start");
  ch->add_option("--tmax", ch_tmax, "Grid end");
  ch->add_option("--steps", ch_steps, "Grid steps")->check(CLI::Range(0, 100000));
  ch->add_flag("--standardized", ch_std, "Standardize to mean 0, sigma 1");
  ch->add_option("--format", ch_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  ch->callback([&] {
    rc = run_charfun(ch_poly, ch_rat, ch_tmin, ch_tmax, ch_steps, ch_std,
                     ch_fmt);
  });

  // diagnose
  std::string dg_rat, dg_fmt = "json";
  long dg_beta = 0;
  auto* dg = app.add_subcommand(
      "diagnose", "Normality diagnostics of a rational form as given");
  dg->add_option("--ratform", dg_rat, "Numerator/denominator")->required();
  dg->add_option("--beta", dg_beta, "Extra power of q");
  dg->add_option("--format", dg_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  dg->callback([&] { rc = run_diagnose(dg_rat, dg_beta, dg_fmt); });

  // scan
  std::string sc_family, sc_points, sc_fmt = "csv";
  double sc_ratio_max = 0.95, sc_quartic_min = 10.0;
  auto* sc = app.add_subcommand(
      "scan", "Normality scan along a parameterized family");
  sc->add_option("--family", sc_family, "qbinomial|macmahon|qfactorial|qcatalan")
      ->required();
  sc->add_option("--points", sc_points, "Parameter values N1,N2,...")
      ->required();
  sc->add_option("--ratio-max", sc_ratio_max, "Ratio threshold");
  sc->add_option("--quartic-min", sc_quartic_min, "Quartic-sum threshold");
  sc->add_option("--format", sc_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sc->callback([&] {
    rc = run_scan(sc_family, sc_points, sc_ratio_max, sc_quartic_min, sc_fmt);
  });

  // family
  std::string fa_name, fa_params, fa_partition, fa_fmt = "json";
  auto* fa = app.add_subcommand("family", "Named CGF families");
  fa->add_option("--name", fa_name,
                 "qbinomial|qfactorial|qmultinomial|qcatalan|macmahon|hook")
      ->required();
  fa->add_option("--params", fa_params, "Comma-separated parameters");
  fa->add_option("--partition", fa_partition, "Partition for hook, e.g. 4,2,1");
  fa->add_option("--format", fa_fmt)
      ->check(CLI::IsMember({"json", "text"}));
  fa->callback(
      [&] { rc = run_family(fa_name, fa_params, fa_partition, fa_fmt); });

  // oracle
  std::string or_kind, or_params, or_partition, or_fmt = "json";
  auto* orc = app.add_subcommand(
      "oracle", "Brute-force combinatorial generating polynomials");
  orc->add_option("--kind", or_kind,
                  "plane_partitions|syt_maj|box_partitions")
      ->required();
  orc->add_option("--params", or_params, "Comma-separated parameters");
  orc->add_option("--partition", or_partition, "Partition for syt_maj");
  orc->add_option("--format", or_fmt)
      ->check(CLI::IsMember({"json", "csv", "bfile", "text"}));
  orc->callback(
      [&] { rc = run_oracle(or_kind, or_params, or_partition, or_fmt); });

  // enumerate
  std::string en_class, en_fmt = "bfile";
  int en_maxdeg = 10, en_threads = 1;
  bool en_gens = false;
  auto* en = app.add_subcommand(
      "enumerate", "Count monoid elements per degree");
  en->add_option("--class", en_class, "pm|plus|uni|lcc|gale")->required();
  en->add_option("--max-degree", en_maxdeg)->check(CLI::Range(1, 64));
  en->add_option("--threads", en_threads)->check(CLI::Range(1, 256));
  en->add_flag("--generators", en_gens, "Include generators in JSON records");
  en->add_option("--format", en_fmt)
      ->check(CLI::IsMember({"json", "csv", "bfile", "text"}));
  en->callback([&] {
    rc = run_enumerate(en_class, en_maxdeg, en_threads, en_gens, en_fmt);
  });

  // generators
  std::string ge_class, ge_fmt = "bfile";
  int ge_maxdeg = 10, ge_threads = 1;
  auto* ge = app.add_subcommand(
      "generators", "Irreducible monoid elements per degree");
  ge->add_option("--class", ge_class, "pm|plus|uni|lcc|gale")->required();
  ge->add_option("--max-degree", ge_maxdeg)->check(CLI::Range(1, 64));
  ge->add_option("--threads", ge_threads)->check(CLI::Range(1, 256));
  ge->add_option("--format", ge_fmt)
      ->check(CLI::IsMember({"json", "csv", "bfile", "text"}));
  ge->callback(
      [&] { rc = run_generators(ge_class, ge_maxdeg, ge_threads, ge_fmt); });

  // conjecture
  std::string cj_which, cj_fmt = "json";
  int cj_maxdeg = 10, cj_threads = 1;
  auto* cj = app.add_subcommand("conjecture", "Exhaustive conjecture scans");
  cj->add_option("--which", cj_which,
                 "majorization|uni_prime_factor|nongale_count")
      ->required();
  cj->add_option("--max-degree", cj_maxdeg)->check(CLI::Range(1, 64));
  cj->add_option("--threads", cj_threads)->check(CLI::Range(1, 256));
  cj->add_option("--format", cj_fmt)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cj->callback(
      [&] { rc = run_conjecture(cj_which, cj_maxdeg, cj_threads, cj_fmt); });

  // graphpath
  std::string gp_b, gp_a, gp_a2, gp_fmt = "json";
  auto* gp = app.add_subcommand(
      "graphpath", "Path between CGFs sharing a denominator");
  gp->add_option("--b", gp_b, "Common denominator multiset")->required();
  gp->add_option("--a", gp_a, "First numerator multiset")->required();
  gp->add_option("--a2", gp_a2, "Second numerator multiset")->required();
  gp->add_option("--format", gp_fmt)
      ->check(CLI::IsMember({"json", "text"}));
  gp->callback([&] { rc = run_graphpath(gp_b, gp_a, gp_a2, gp_fmt); });

  std::string cache = cache_file_path();
  if (!cache.empty()) cgf::cyclo_cache_load(cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "usage: cgf SUBCOMMAND [OPTIONS]; see 'cgf --help'\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (!cache.empty()) cgf::cyclo_cache_save(cache);
  return rc;
}
