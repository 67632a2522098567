// Copyright 2026 The AIF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// aif: self-delimiting integer codecs, compression-based description-length
// bounds, reference process generators, and forecastability classification,
// behind one deterministic command-line tool.
//
// Exit codes: 0 success, 1 data or validation error, 2 usage error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aif/complexity.hpp"
#include "aif/compress.hpp"
#include "aif/dataset.hpp"
#include "aif/forecast.hpp"
#include "aif/generators.hpp"
#include "aif/selfdelim.hpp"

namespace {

constexpr const char* kVersion = "aif 1.0.0";

namespace data = aif::data;
namespace fc = aif::forecast;
namespace gen = aif::gen;
namespace cx = aif::complexity;
namespace sd = aif::selfdelim;
using nlohmann::json;

std::uint64_t env_seed_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("AIF_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

std::string join_args(int argc, char** argv) {
  std::string joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

void write_csv_header(std::ostream& out, const std::string& command_line,
                      std::uint64_t seed) {
  out << "# " << kVersion << "\n";
  out << "# command: " << command_line << "\n";
  out << "# seed: " << seed << "\n";
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

sd::BigInt parse_big(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("expected a decimal integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected a nonnegative decimal integer, got '" + text +
                                  "'");
    }
  }
  return sd::BigInt(text);
}

gen::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return gen::Rational(parse_big(text));
  }
  const sd::BigInt num = parse_big(text.substr(0, slash));
  const sd::BigInt den = parse_big(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("--omega denominator must be nonzero");
  return gen::Rational(num, den);
}

sd::Scheme parse_scheme(const std::string& name) {
  if (name == "lgstar") return sd::Scheme::lgstar;
  if (name == "dup" || name == "bitdup") return sd::Scheme::bitdup;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

// Merges a training file and an evaluation file into one dataset whose
// split is the training record count.
data::Dataset merge_train_eval(const std::string& train_path,
                               const std::string& eval_path) {
  data::Dataset train = data::read_jsonl_file(train_path);
  const data::Dataset eval = data::read_jsonl_file(eval_path);
  if (train.x_kind != eval.x_kind || train.y_kind != eval.y_kind) {
    throw std::invalid_argument("train and eval files carry different value kinds");
  }
  train.split_n = train.size();
  train.x_real.insert(train.x_real.end(), eval.x_real.begin(), eval.x_real.end());
  train.y_real.insert(train.y_real.end(), eval.y_real.begin(), eval.y_real.end());
  train.x_bits.insert(train.x_bits.end(), eval.x_bits.begin(), eval.x_bits.end());
  train.y_bits.insert(train.y_bits.end(), eval.y_bits.begin(), eval.y_bits.end());
  train.validate();
  return train;
}

json estimate_to_json(const cx::ComplexityEstimate& est) {
  return json{{"bits", est.bits},
              {"backend", est.backend},
              {"kind", std::string(cx::kind_name(est.kind))},
              {"machine_constant_unmodeled", est.machine_constant_unmodeled}};
}

struct PredictorArgs {
  std::string name = "lookup";
  std::string metric = "exact";
  unsigned scale_bits = 0;

  fc::Metric parsed_metric() const { return fc::metric_from_name(metric); }
  std::unique_ptr<fc::Predictor> build() const {
    fc::PredictorOptions options;
    options.metric = parsed_metric();
    options.scale_bits = scale_bits;
    return fc::make_predictor(name, options);
  }
};

void add_predictor_flags(CLI::App* cmd, PredictorArgs& args) {
  cmd->add_option("--predictor", args.name, "exact_prng | lookup | knn1 | constant")
      ->required();
  cmd->add_option("--metric", args.metric, "abs | hamming | exact");
  cmd->add_option("--scale-bits", args.scale_bits,
                  "exact_prng reports floor(y * 2^scale_bits)");
}

int run(int argc, char** argv) {
  const std::string command_line = join_args(argc, argv);
  CLI::App app{"algorithmic information forecastability toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* encode_cmd =
      app.add_subcommand("encode", "encode an integer as a self-delimiting codeword");
  std::string encode_value, encode_scheme = "lgstar";
  encode_cmd->add_option("--value", encode_value, "nonnegative integer, any size")
      ->required();
  encode_cmd->add_option("--scheme", encode_scheme, "lgstar | dup");

  auto* decode_cmd =
      app.add_subcommand("decode", "decode one or more concatenated codewords");
  std::string decode_bits, decode_scheme = "lgstar";
  decode_cmd->add_option("--bits", decode_bits, "codeword bits as a 0/1 string")
      ->required();
  decode_cmd->add_option("--scheme", decode_scheme, "lgstar | dup");

  auto* table_cmd =
      app.add_subcommand("codec-table", "code lengths by value bit-length, as CSV");
  unsigned table_max_bits = 64, table_step = 1;
  std::string table_out;
  table_cmd->add_option("--max-bits", table_max_bits, "largest value bit-length (>= 2)");
  table_cmd->add_option("--step", table_step, "bit-length stride (>= 1)");
  table_cmd->add_option("--out", table_out, "CSV path, '-' for stdout");

  auto* gen_cmd = app.add_subcommand("gen", "generate a reference process");
  gen_cmd->require_subcommand(1);

  auto* champ_cmd =
      gen_cmd->add_subcommand("champernowne", "binary counting concatenation");
  std::uint64_t champ_n = 20;
  std::string champ_out;
  champ_cmd->add_option("--n", champ_n, "last number in the concatenation");
  champ_cmd->add_option("--out", champ_out, "output path, '-' for stdout");

  auto* prng_cmd = gen_cmd->add_subcommand("prng", "recurrence dataset (x_m, x_{m+1})");
  double prng_seed = 0.0;
  std::uint64_t prng_count = 1000;
  std::optional<std::size_t> prng_split;
  std::string prng_truncate, prng_out;
  std::uint64_t prng_trigger_seed = env_seed_or(0);
  prng_cmd->add_option("--seed", prng_seed, "initial value in [0, 1)");
  prng_cmd->add_option("--count", prng_count, "number of records");
  prng_cmd->add_option("--split", prng_split, "training split N (default count/2)");
  prng_cmd->add_option(
      "--truncate", prng_truncate,
      "s,s_min: serve outputs at integer scale 2^s with s'' in {s_min..s}");
  prng_cmd->add_option("--trigger-seed", prng_trigger_seed,
                       "seed for the precision trigger stream");
  prng_cmd->add_option("--out", prng_out, "JSONL path, '-' for stdout");

  auto* markov_cmd = gen_cmd->add_subcommand("markov", "finite chain trajectory dataset");
  std::string markov_spec_path, markov_out;
  std::uint64_t markov_steps = 1000, markov_seed = env_seed_or(0);
  std::optional<std::size_t> markov_split;
  markov_cmd->add_option("--spec", markov_spec_path, "chain spec JSON file")->required();
  markov_cmd->add_option("--steps", markov_steps, "trajectory length");
  markov_cmd->add_option("--seed", markov_seed, "trajectory seed");
  markov_cmd->add_option("--split", markov_split, "training split N (default steps/2)");
  markov_cmd->add_option("--out", markov_out, "JSONL path, '-' for stdout");

  auto* dyadic_cmd = gen_cmd->add_subcommand("dyadic", "dyadic expansion ladder dataset");
  std::string dyadic_omega = "1/2", dyadic_out;
  std::uint64_t dyadic_terms = 16;
  std::optional<std::size_t> dyadic_split;
  dyadic_cmd->add_option("--omega", dyadic_omega, "rational in (0,1], as P/Q");
  dyadic_cmd->add_option("--terms", dyadic_terms, "number of digits (<= 52)");
  dyadic_cmd->add_option("--split", dyadic_split, "training split N (default terms/2)");
  dyadic_cmd->add_option("--out", dyadic_out, "JSONL path, '-' for stdout");

  auto* estimate_cmd =
      app.add_subcommand("estimate-k", "description-length upper bound of a file");
  std::string estimate_input, estimate_cond, estimate_backend = "lz";
  estimate_cmd->add_option("--input", estimate_input, "file whose bytes are measured")
      ->required();
  estimate_cmd->add_option("--cond", estimate_cond, "optional context file");
  estimate_cmd->add_option("--backend", estimate_backend, "lz | zlib | rle | store");

  auto* fe_cmd = app.add_subcommand(
      "fe-bound", "bound on the forecast-useful information in training data");
  std::string fe_train, fe_backend = "lz";
  fe_cmd->add_option("--train", fe_train, "dataset JSONL; uses its training split")
      ->required();
  fe_cmd->add_option("--backend", fe_backend, "lz | zlib | rle | store");

  auto* locus_cmd =
      app.add_subcommand("locus", "empirical precision curve epsilon -> fraction");
  std::string locus_train, locus_eval, locus_data, locus_epsilons, locus_out;
  PredictorArgs locus_predictor;
  locus_predictor.metric = "abs";
  locus_cmd->add_option("--train", locus_train, "training dataset JSONL");
  locus_cmd->add_option("--eval", locus_eval, "evaluation dataset JSONL");
  locus_cmd->add_option("--data", locus_data, "single dataset JSONL with its own split");
  add_predictor_flags(locus_cmd, locus_predictor);
  locus_cmd->add_option("--epsilons", locus_epsilons, "comma-separated ascending radii")
      ->required();
  locus_cmd->add_option("--out", locus_out, "CSV path, '-' for stdout");

  auto* classify_cmd =
      app.add_subcommand("classify", "oracle / precise / probabilistic verdict");
  std::string classify_train, classify_eval, classify_data;
  PredictorArgs classify_predictor;
  double classify_epsilon = 0.0;
  bool classify_no_errors = false;
  classify_cmd->add_option("--train", classify_train, "training dataset JSONL");
  classify_cmd->add_option("--eval", classify_eval, "evaluation dataset JSONL");
  classify_cmd->add_option("--data", classify_data,
                           "single dataset JSONL with its own split");
  add_predictor_flags(classify_cmd, classify_predictor);
  classify_cmd->add_option("--epsilon", classify_epsilon, "precision radius");
  classify_cmd->add_flag("--no-errors", classify_no_errors,
                         "omit the error vector from the report");

  auto* findn_cmd =
      app.add_subcommand("find-n", "smallest training split achieving the verdict");
  std::string findn_stream;
  PredictorArgs findn_predictor;
  std::optional<double> findn_epsilon;
  std::uint64_t findn_horizon = 0;
  findn_cmd->add_option("--stream", findn_stream, "dataset JSONL")->required();
  add_predictor_flags(findn_cmd, findn_predictor);
  findn_cmd->add_option("--epsilon", findn_epsilon,
                        "radius; goal is precise when given, else oracle");
  findn_cmd->add_option("--horizon", findn_horizon, "records to consider (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }
  const std::uint64_t header_seed = env_seed_or(0);

  if (*encode_cmd) {
    std::cout << sd::encode(parse_big(encode_value), parse_scheme(encode_scheme))
                     .to_string()
              << "\n";
    return 0;
  }

  if (*decode_cmd) {
    const auto bits = aif::BitString::from_string(decode_bits);
    const auto scheme = parse_scheme(decode_scheme);
    std::size_t cursor = 0;
    while (cursor < bits.size()) {
      const auto d = sd::decode(bits, scheme, cursor);
      std::cout << d.value.str() << "\n";
      cursor = d.next;
    }
    return 0;
  }

  if (*table_cmd) {
    std::ofstream file;
    std::ostream& out = open_output(file, table_out);
    write_csv_header(out, command_line, header_seed);
    out << "bits,dup_len,lgstar_len\n";
    for (const auto& row : sd::codec_table(table_max_bits, table_step)) {
      out << row.value_bits << ',' << row.dup_len << ',' << row.lgstar_len << "\n";
    }
    return 0;
  }

  if (*champ_cmd) {
    std::ofstream file;
    std::ostream& out = open_output(file, champ_out);
    out << gen::champernowne(champ_n).to_string() << "\n";
    return 0;
  }

  if (*prng_cmd) {
    data::Dataset d;
    if (prng_truncate.empty()) {
      d = prng_split ? gen::prng_dataset(prng_seed, prng_count, *prng_split)
                     : gen::prng_dataset(prng_seed, prng_count);
    } else {
      unsigned s = 0, s_min = 0;
      char comma = 0;
      std::istringstream spec(prng_truncate);
      if (!(spec >> s >> comma >> s_min) || comma != ',' || !spec.eof()) {
        throw std::invalid_argument("--truncate expects s,s_min");
      }
      gen::TruncationParams params{s, s_min, prng_trigger_seed};
      d = prng_split ? gen::prng_truncated(prng_seed, prng_count, params, *prng_split)
                     : gen::prng_truncated(prng_seed, prng_count, params);
    }
    std::ofstream file;
    data::write_jsonl(d, open_output(file, prng_out));
    return 0;
  }

  if (*markov_cmd) {
    std::ifstream spec_in(markov_spec_path);
    if (!spec_in) {
      throw std::invalid_argument("cannot open spec file: " + markov_spec_path);
    }
    std::stringstream buffer;
    buffer << spec_in.rdbuf();
    const auto spec = gen::markov_spec_from_json(buffer.str());
    const auto t = markov_split ? gen::markov_simulate(spec, markov_steps, markov_seed,
                                                       *markov_split)
                                : gen::markov_simulate(spec, markov_steps, markov_seed);
    std::ofstream file;
    data::write_jsonl(t.dataset, open_output(file, markov_out));
    return 0;
  }

  if (*dyadic_cmd) {
    const auto omega = parse_rational(dyadic_omega);
    const auto d = dyadic_split ? gen::dyadic_dataset(omega, dyadic_terms, *dyadic_split)
                                : gen::dyadic_dataset(omega, dyadic_terms);
    std::ofstream file;
    data::write_jsonl(d, open_output(file, dyadic_out));
    return 0;
  }

  if (*estimate_cmd) {
    const auto& backend = aif::compress::get_backend(estimate_backend);
    const auto input = read_file_bytes(estimate_input);
    cx::ComplexityEstimate est;
    if (estimate_cond.empty()) {
      est = cx::estimate_k(input, backend);
    } else {
      est = cx::estimate_k_conditional(input, read_file_bytes(estimate_cond), backend);
    }
    std::cout << estimate_to_json(est).dump() << "\n";
    return 0;
  }

  if (*fe_cmd) {
    const auto d = data::read_jsonl_file(fe_train);
    const auto est = cx::fe_bound(d, aif::compress::get_backend(fe_backend));
    json out = estimate_to_json(est);
    out["train_records"] = d.split_n;
    std::cout << out.dump() << "\n";
    return 0;
  }

  const auto load_split_dataset = [&](const std::string& data_path,
                                      const std::string& train_path,
                                      const std::string& eval_path) {
    if (!data_path.empty()) {
      if (!train_path.empty() || !eval_path.empty()) {
        throw std::invalid_argument("use either --data or --train/--eval, not both");
      }
      return data::read_jsonl_file(data_path);
    }
    if (train_path.empty() || eval_path.empty()) {
      throw std::invalid_argument("need --data, or both --train and --eval");
    }
    return merge_train_eval(train_path, eval_path);
  };

  if (*locus_cmd) {
    const auto d = load_split_dataset(locus_data, locus_train, locus_eval);
    std::vector<double> grid;
    std::stringstream eps_stream(locus_epsilons);
    std::string token;
    while (std::getline(eps_stream, token, ',')) grid.push_back(data::parse_real(token));
    auto predictor = locus_predictor.build();
    const auto curve = fc::locus(d, *predictor, locus_predictor.parsed_metric(), grid);
    std::ofstream file;
    std::ostream& out = open_output(file, locus_out);
    write_csv_header(out, command_line, header_seed);
    out << "epsilon,fraction\n";
    for (const auto& [eps, p] : curve.points) {
      out << data::format_real(eps) << ',' << data::format_real(p) << "\n";
    }
    return 0;
  }

  if (*classify_cmd) {
    const auto d = load_split_dataset(classify_data, classify_train, classify_eval);
    auto predictor = classify_predictor.build();
    const fc::PrecisionSpec precision{classify_predictor.parsed_metric(),
                                      classify_epsilon,
                                      {}};
    const auto report = fc::classify(d, *predictor, precision);
    json out{{"class", std::string(fc::class_name(report.cls))},
             {"P", report.fraction},
             {"split_N", report.split_n},
             {"metric", std::string(fc::metric_name(precision.metric))},
             {"epsilon", precision.radius},
             {"predictor", classify_predictor.name}};
    if (!classify_no_errors) {
      json errors = json::array();
      for (double e : report.errors) {
        errors.push_back(std::isfinite(e) ? json(e) : json("inf"));
      }
      out["errors"] = std::move(errors);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (*findn_cmd) {
    const auto d = data::read_jsonl_file(findn_stream);
    const std::size_t horizon = findn_horizon == 0 ? d.size() : findn_horizon;
    const fc::PrecisionSpec precision{findn_predictor.parsed_metric(),
                                      findn_epsilon.value_or(0.0),
                                      {}};
    const auto goal = findn_epsilon ? fc::Goal::precise : fc::Goal::oracle;
    const auto result = fc::find_minimal_n(
        d, [&] { return findn_predictor.build(); }, precision, horizon, goal);
    std::cout << json{{"found", result.found},
                      {"N", result.split_n},
                      {"trivial", result.trivial},
                      {"horizon", horizon}}
                     .dump()
              << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
