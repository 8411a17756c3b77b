// Command-line front end: construct, verify, classify, and analyze
// nearly perfect 1-covering codes. Exit codes: 0 success, 1 a code failed
// verification or audit, 2 usage or file errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "npcc/balanced.hpp"
#include "npcc/bounds.hpp"
#include "npcc/census.hpp"
#include "npcc/code.hpp"
#include "npcc/construct.hpp"
#include "npcc/extend.hpp"
#include "npcc/np1cc.hpp"
#include "npcc/perfect.hpp"
#include "npcc/rational.hpp"
#include "npcc/spectra.hpp"
#include "npcc/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace npcc;

std::string rat_str(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

ordered_json rational_array(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const Rational& q : v) arr.push_back(rat_str(q));
  return arr;
}

ordered_json count_array(const std::vector<long long>& v) {
  ordered_json arr = ordered_json::array();
  for (long long x : v) arr.push_back(x);
  return arr;
}

ordered_json report_json(const Np1ccReport& rep) {
  ordered_json res;
  res["is_np1cc"] = rep.is_np1cc;
  res["n"] = rep.n;
  res["M"] = rep.M;
  res["r"] = rep.r;
  res["type"] = code_type_str(rep.type);
  res["k"] = rep.k;
  res["midword_count"] = static_cast<long long>(rep.midwords.size());
  res["failures"] = rep.failures;
  return res;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void write_text_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

ordered_json doc_skeleton(const std::string& command, ordered_json inputs) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  return doc;
}

Code run_recipe(const std::string& recipe, int r, const std::string& lambda_file) {
  if (recipe == "glue-a") return glue(hamming_code(r), hamming_code(r));
  if (recipe == "glue-b") {
    Code h = hamming_code(r);
    return glue(h, translate(h, Word::unit(h.length(), 1)));
  }
  if (recipe == "glue-c") {
    if (r != 3 && r != 4)
      throw CLI::ValidationError("--r", "glue-c supports r in {3,4}");
    Code base = hamming_code(r - 1);
    LambdaTable flat = zero_lambda(base);
    LambdaTable second;
    if (!lambda_file.empty()) {
      second = load_lambda(lambda_file, base.length());
    } else {
      second = flat;
      second[base.words()[1]] = 1;  // flip the smallest nonzero codeword
    }
    return glue(vasiliev(base, flat), vasiliev(base, second));
  }
  if (recipe == "union-a") {
    Code ext = extend_even(hamming_code(r));
    return type_a_union(ext, translate(ext, Word::unit(ext.length(), 1)));
  }
  if (recipe == "linear-a") return linear_np1cc(r, LinearVariant::A);
  if (recipe == "linear-b") return linear_np1cc(r, LinearVariant::B);
  if (recipe == "balanced") {
    if (r != 3 && r != 4)
      throw CLI::ValidationError("--r", "balanced supports r in {3,4}");
    return build_balanced(r);
  }
  throw CLI::ValidationError("--recipe", "unknown recipe " + recipe);
}

int do_construct(const std::string& recipe, int r, const std::string& lambda_file,
                 const std::string& out_path) {
  Code code = run_recipe(recipe, r, lambda_file);
  Np1ccReport rep = verify_np1cc(code);
  code.save(out_path);
  ordered_json inputs;
  inputs["recipe"] = recipe;
  inputs["r"] = r;
  if (!lambda_file.empty()) inputs["lambda_file"] = lambda_file;
  inputs["out"] = out_path;
  ordered_json doc = doc_skeleton("construct", std::move(inputs));
  doc["results"] = report_json(rep);
  emit(doc);
  return rep.is_np1cc ? 0 : 1;
}

int do_verify(const std::string& in_path) {
  Code code = Code::load(in_path);
  Np1ccReport rep = verify_np1cc(code);
  ordered_json doc = doc_skeleton("verify", {{"in", in_path}});
  doc["results"] = report_json(rep);
  emit(doc);
  return rep.is_np1cc ? 0 : 1;
}

int do_classify(const std::string& in_path) {
  Code code = Code::load(in_path);
  Np1ccReport rep = verify_np1cc(code);
  ordered_json doc = doc_skeleton("classify", {{"in", in_path}});
  ordered_json res;
  res["is_np1cc"] = rep.is_np1cc;
  res["type"] = code_type_str(rep.type);
  res["k"] = rep.k;
  res["pair_count"] = static_cast<long long>(rep.pairs.pairs.size());
  res["failures"] = rep.failures;
  doc["results"] = res;
  emit(doc);
  return rep.is_np1cc ? 0 : 1;
}

int do_pairs(const std::string& in_path) {
  Code code = Code::load(in_path);
  Np1ccReport rep = verify_np1cc(code);
  ordered_json doc = doc_skeleton("pairs", {{"in", in_path}});
  ordered_json res;
  res["is_np1cc"] = rep.is_np1cc;
  ordered_json pair_arr = ordered_json::array();
  for (const PartnerPair& p : rep.pairs.pairs) {
    ordered_json item;
    item["a"] = p.a.str();
    item["b"] = p.b.str();
    item["kind"] = p.kind == PairKind::type_i ? "I" : "II";
    pair_arr.push_back(item);
  }
  res["pairs"] = pair_arr;
  ordered_json mids = ordered_json::array();
  for (const Word& w : rep.midwords) mids.push_back(w.str());
  res["midwords"] = mids;
  res["failures"] = rep.failures;
  doc["results"] = res;
  emit(doc);
  return rep.is_np1cc ? 0 : 1;
}

int do_spectrum(const std::string& in_path, const std::string& translate_str,
                const std::string& format) {
  Code code = Code::load(in_path);
  std::optional<Word> by;
  if (!translate_str.empty()) by = Word::parse(translate_str);
  Spectrum sp = analyze(code, by);
  if (format == "text") {
    std::ostringstream out;
    out << "n: " << sp.n << "\nM: " << sp.M << "\nA:";
    for (long long a : sp.A) out << " " << a;
    out << "\nB:";
    for (const Rational& b : sp.B) out << " " << rat_str(b);
    out << "\nA':";
    for (const Rational& a : sp.A_prime) out << " " << rat_str(a);
    out << "\nB':";
    for (const Rational& b : sp.B_prime) out << " " << rat_str(b);
    out << "\ns': " << sp.s_prime << "\n";
    std::cout << out.str();
    return 0;
  }
  ordered_json inputs;
  inputs["in"] = in_path;
  if (!translate_str.empty()) inputs["translate"] = translate_str;
  ordered_json doc = doc_skeleton("spectrum", std::move(inputs));
  ordered_json res;
  res["n"] = sp.n;
  res["M"] = sp.M;
  res["A"] = count_array(sp.A);
  res["B"] = rational_array(sp.B);
  res["A_prime"] = rational_array(sp.A_prime);
  res["B_prime"] = rational_array(sp.B_prime);
  res["s_prime"] = sp.s_prime;
  doc["results"] = res;
  emit(doc);
  return 0;
}

int do_balanced(int r, const std::string& out_path) {
  Code code = build_balanced(r);
  Np1ccReport rep = verify_np1cc(code);
  if (!out_path.empty()) code.save(out_path);
  ordered_json inputs;
  inputs["r"] = r;
  if (!out_path.empty()) inputs["out"] = out_path;
  ordered_json doc = doc_skeleton("balanced", std::move(inputs));
  ordered_json res = report_json(rep);
  if (rep.is_np1cc && rep.type == CodeType::A) {
    std::vector<long long> counts = type_i_coordinate_counts(code);
    res["per_coordinate_type_i"] = count_array(counts);
    res["balanced"] = is_balanced(code);
  }
  doc["results"] = res;
  emit(doc);
  return rep.is_np1cc ? 0 : 1;
}

int do_extend_scan(const std::string& in_path) {
  Code code = Code::load(in_path);
  ordered_json doc = doc_skeleton("extend-scan", {{"in", in_path}});
  Code extended;
  try {
    extended = extend_np1cc(code);
  } catch (const std::invalid_argument& e) {
    ordered_json res;
    res["is_np1cc"] = false;
    res["error"] = e.what();
    doc["results"] = res;
    emit(doc);
    return 1;
  }
  PunctureProfile profile = puncture_scan(extended);
  std::string tags;
  for (CoordTag t : profile.tags) tags.push_back(coord_tag_char(t));
  ordered_json res;
  res["is_np1cc"] = true;
  res["extended_length"] = profile.extended_length;
  res["profile"] = tags;
  res["nA"] = profile.count(CoordTag::A);
  res["nB"] = profile.count(CoordTag::B);
  res["nC"] = profile.count(CoordTag::C);
  res["class_key"] = equivalence_key(code);
  doc["results"] = res;
  emit(doc);
  return 0;
}

int do_census(int n, int threads, const std::string& out_path) {
  CensusResult result = run_census(n, threads);
  if (!out_path.empty()) write_text_atomic(out_path, census_json(result));
  ordered_json inputs;
  inputs["n"] = n;
  inputs["threads"] = threads;
  if (!out_path.empty()) inputs["out"] = out_path;
  ordered_json doc = doc_skeleton("census", std::move(inputs));
  ordered_json res;
  res["total"] = result.total;
  res["types"] = {{"A", result.type_a}, {"B", result.type_b}, {"C", result.type_c}};
  ordered_json hist = ordered_json::object();
  for (const auto& [k, count] : result.k_histogram) hist[std::to_string(k)] = count;
  res["k_histogram"] = hist;
  res["violations"] = result.violations;
  doc["results"] = res;
  emit(doc);
  return result.violations.empty() ? 0 : 1;
}

int do_bounds(int n, int R, long long M) {
  ordered_json doc = doc_skeleton("bounds", {{"n", n}, {"R", R}, {"M", M}});
  ordered_json arr = ordered_json::array();
  std::vector<BoundName> names = {BoundName::sphere_packing, BoundName::sphere_covering,
                                  BoundName::johnson, BoundName::struik};
  if (n % 2 == 0 && R == 1) names.push_back(BoundName::van_wee);
  bool all_ok = true;
  for (BoundName name : names) {
    BoundReport rep = bound(name, n, R, Int(M));
    ordered_json item;
    item["name"] = bound_name_str(name);
    item["direction"] = rep.direction == BoundDirection::upper ? "upper" : "lower";
    item["value"] = rat_str(rep.value);
    item["satisfied"] = rep.satisfied;
    arr.push_back(item);
    if (!rep.satisfied) all_ok = false;
  }
  doc["results"] = ordered_json{{"bounds", arr}, {"all_satisfied", all_ok}};
  emit(doc);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearly perfect 1-covering code toolkit"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "worker threads (census)")->capture_default_str();

  auto* c_construct = app.add_subcommand("construct", "build a code from a named recipe");
  std::string recipe, lambda_file, out_path;
  int r = 3;
  c_construct->add_option("--recipe", recipe, "recipe name")
      ->required()
      ->check(CLI::IsMember(
          {"glue-a", "glue-b", "glue-c", "union-a", "linear-a", "linear-b", "balanced"}));
  c_construct->add_option("--r", r, "size parameter (code length is 2^r)")->required();
  c_construct->add_option("--lambda-file", lambda_file,
                          "sign table for the second half of glue-c");
  c_construct->add_option("--out", out_path, "output code file")->required();

  std::string in_verify, in_classify, in_pairs, in_spectrum, in_scan;
  auto* c_verify = app.add_subcommand("verify", "check the full structural definition");
  c_verify->add_option("--in", in_verify, "code file")->required();
  auto* c_classify = app.add_subcommand("classify", "report type and distance-1 pair count");
  c_classify->add_option("--in", in_classify, "code file")->required();
  auto* c_pairs = app.add_subcommand("pairs", "list partner pairs and midwords");
  c_pairs->add_option("--in", in_pairs, "code file")->required();

  auto* c_spectrum = app.add_subcommand("spectrum", "weight/distance distributions and transforms");
  std::string translate_str, format = "json";
  c_spectrum->add_option("--in", in_spectrum, "code file")->required();
  c_spectrum->add_option("--translate", translate_str, "translate by this word first");
  c_spectrum->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* c_balanced = app.add_subcommand("balanced", "build the coordinate-balanced family");
  int balanced_r = 3;
  std::string balanced_out;
  c_balanced->add_option("--r", balanced_r, "size parameter (3 or 4)")->required();
  c_balanced->add_option("--out", balanced_out, "output code file");

  auto* c_scan = app.add_subcommand("extend-scan", "extend by a parity coordinate and tag punctures");
  c_scan->add_option("--in", in_scan, "code file")->required();

  auto* c_census = app.add_subcommand("census", "enumerate and audit all codes of a length");
  int census_n = 2;
  std::string census_out;
  c_census->add_option("--n", census_n, "code length (2 or 4)")->required();
  c_census->add_option("--out", census_out, "write the full JSON listing here");

  auto* c_bounds = app.add_subcommand("bounds", "evaluate size bounds for given parameters");
  int bounds_n = 8, bounds_R = 1;
  long long bounds_M = 0;
  c_bounds->add_option("--n", bounds_n, "word length")->required();
  c_bounds->add_option("--R", bounds_R, "covering radius")->required();
  c_bounds->add_option("--M", bounds_M, "code size to test")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_construct->parsed()) return do_construct(recipe, r, lambda_file, out_path);
    if (c_verify->parsed()) return do_verify(in_verify);
    if (c_classify->parsed()) return do_classify(in_classify);
    if (c_pairs->parsed()) return do_pairs(in_pairs);
    if (c_spectrum->parsed()) return do_spectrum(in_spectrum, translate_str, format);
    if (c_balanced->parsed()) return do_balanced(balanced_r, balanced_out);
    if (c_scan->parsed()) return do_extend_scan(in_scan);
    if (c_census->parsed()) return do_census(census_n, threads, census_out);
    if (c_bounds->parsed()) return do_bounds(bounds_n, bounds_R, bounds_M);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
