#include "omegalim/fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "omegalim/errors.hpp"

namespace omegalim {

FitResult estimate_leading_term(const std::vector<Sample>& samples,
                                const std::vector<Prototype>& candidates,
                                double drift_tolerance) {
  if (samples.size() < 8)
    throw UndefinedError("leading-term fit needs at least 8 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first <= samples[i - 1].first)
      throw UndefinedError("sample indices must be strictly increasing");
  if (candidates.empty()) throw UndefinedError("no candidate prototypes");

  std::size_t tail_start = samples.size() / 2;
  FitResult result{0.0, Prototype::unit(), {}};
  std::size_t best = candidates.size();
  for (const auto& p : candidates) {
    FitCandidate cand{p, 0.0, 0.0, false};
    std::vector<double> ratios;
    bool ok = true;
    for (std::size_t i = tail_start; i < samples.size(); ++i) {
      try {
        TowerValue pv = eval_proto(p, samples[i].first);
        double r = tv_div(TowerValue::of(samples[i].second), pv).to_double();
        if (!std::isfinite(r)) ok = false;
        ratios.push_back(r);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok && !ratios.empty()) {
      double mean = 0.0;
      for (double r : ratios) mean += r;
      mean /= static_cast<double>(ratios.size());
      auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
      if (std::fabs(mean) > 1e-300) {
        cand.coefficient = mean;
        cand.drift = (*mx - *mn) / std::fabs(mean);
        cand.usable = std::isfinite(cand.drift);
      }
    }
    result.report.push_back(cand);
    const FitCandidate& back = result.report.back();
    if (back.usable && back.drift <= drift_tolerance &&
        (best == candidates.size() || back.drift < result.report[best].drift))
      best = result.report.size() - 1;
  }
  if (best == candidates.size()) {
    std::ostringstream msg;
    msg << "no candidate tracks the samples within drift " << drift_tolerance;
    for (const auto& c : result.report)
      msg << "; drift " << (c.usable ? std::to_string(c.drift) : "n/a");
    throw NoStableCandidate(msg.str());
  }
  result.coefficient = result.report[best].coefficient;
  result.proto = result.report[best].proto;
  return result;
}

std::vector<Sample> parse_samples(const std::string& text) {
  std::vector<Sample> samples;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw UndefinedError("empty sample input");
  if (text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw UndefinedError("malformed JSON sample array");
    for (const auto& row : j) {
      if (row.is_array() && row.size() == 2) {
        samples.emplace_back(row[0].get<std::uint64_t>(), row[1].get<double>());
      } else if (row.is_object() && row.contains("n") && row.contains("value")) {
        samples.emplace_back(row["n"].get<std::uint64_t>(),
                             row["value"].get<double>());
      } else {
        throw UndefinedError("sample rows must be [n, value] pairs");
      }
    }
    return samples;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw UndefinedError("line " + std::to_string(lineno) +
                           ": expected 'n,value'");
    try {
      std::uint64_t n = std::stoull(line.substr(begin, comma - begin));
      double v = std::stod(line.substr(comma + 1));
      samples.emplace_back(n, v);
    } catch (const std::exception&) {
      throw UndefinedError("line " + std::to_string(lineno) +
                           ": expected 'n,value'");
    }
  }
  if (samples.empty()) throw UndefinedError("no samples found");
  return samples;
}

}  // namespace omegalim
