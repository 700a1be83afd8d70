// bench: prequential accuracy and timing for gnb / lr / ht.
//
//   bench run --dataset elec2 --data-path elec2.csv --models gnb,lr,ht --repeats 7
//   bench run --dataset waveform --seed 42 --count 1000 --models ht --format csv

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riffle/bench.hpp"

int main(int argc, char** argv) {
  using namespace riffle::bench;

  CLI::App app{"Prequential benchmark for streaming classifiers"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Run the model x dataset benchmark");

  BenchConfig cfg;
  std::string models = "gnb,lr,ht";
  std::string out_path;
  Format format = Format::markdown;
  const std::map<std::string, Dataset> datasets{{"elec2", Dataset::elec2}, {"waveform", Dataset::waveform}};
  const std::map<std::string, Format> formats{{"markdown", Format::markdown}, {"csv", Format::csv}};

  run->add_option("--dataset", cfg.dataset, "elec2 or waveform")
      ->required()
      ->transform(CLI::CheckedTransformer(datasets, CLI::ignore_case));
  auto* data_path = run->add_option("--data-path", cfg.data_path, "Elec2 CSV file")->check(CLI::ExistingFile);
  run->add_option("--seed", cfg.seed, "Waveform seed")->capture_default_str();
  run->add_option("--count", cfg.count, "Waveform sample count")->capture_default_str();
  run->add_option("--models", models, "Comma-separated subset of gnb,lr,ht")->capture_default_str();
  run->add_option("--repeats", cfg.repeats, "Timed runs per model")->capture_default_str()->check(CLI::PositiveNumber);
  run->add_option("--format", format, "markdown or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  run->add_option("--out", out_path, "Write the table here instead of stdout");
  run->add_flag("--single-thread", cfg.single_thread, "Run every cell sequentially");

  CLI11_PARSE(app, argc, argv);

  for (std::size_t start = 0; start <= models.size();) {
    const auto comma = std::min(models.find(',', start), models.size());
    if (comma > start) cfg.models.push_back(models.substr(start, comma - start));
    start = comma + 1;
  }
  if (cfg.dataset == Dataset::elec2 && data_path->count() == 0) {
    std::cerr << "bench: --dataset elec2 requires --data-path\n";
    return 2;
  }

  try {
    validate(cfg);
    const BenchReport report = run_benchmark(cfg);
    const std::string table = render_table(report, format);
    if (out_path.empty()) {
      std::cout << table;
    } else {
      std::ofstream out(out_path);
      if (!(out << table)) {
        std::cerr << "bench: cannot write " << out_path << '\n';
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
