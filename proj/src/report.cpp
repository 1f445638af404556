#include "mdastyl/report.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

void ReportSpec::validate() const {
  if (!(threshold >= 0.0)) throw ConfigError("notable threshold must be >= 0");
  if (!table_text && !delimited && !figure) throw ConfigError("report needs at least one output format");
  for (const auto d : dimensions) {
    if (d >= kDimensionCount) throw ConfigError("report dimension out of range");
  }
}

bool ReportSpec::wants(Topic t) const {
  return topics.empty() || std::find(topics.begin(), topics.end(), t) != topics.end();
}

std::vector<std::size_t> report_dimensions(bool include_d6) {
  std::vector<std::size_t> dims{0, 1, 2, 3, 4};
  if (include_d6) dims.push_back(5);
  return dims;
}

namespace {

std::string label_of(const std::string& id) {
  if (const auto f = feature_index(id)) return display_name(*f);
  return id;
}

std::vector<EffectSize> table_rows(const std::vector<EffectSize>& effects, const ReportSpec& spec) {
  auto sorted = effects;
  sort_effects(sorted);
  return notable(sorted, spec.threshold);
}

std::string threshold_text(const ReportSpec& spec) { return format_fixed(spec.threshold, 2); }

}  // namespace

std::string render_feature_table(const std::vector<EffectSize>& effects, const ReportSpec& spec,
                                 const std::string& title) {
  std::ostringstream out;
  out << title << '\n';
  out << "Feature | Cohen's d | Credible Mean | Non-Credible Mean\n";
  const auto rows = table_rows(effects, spec);
  if (rows.empty()) {
    out << "(no feature reaches |d| >= " << threshold_text(spec) << ") | - | - | -\n";
  }
  for (const auto& e : rows) {
    out << label_of(e.id) << " | " << format_fixed(std::fabs(e.d), 2) << " | "
        << format_fixed(e.mean_credible, 2) << " | " << format_fixed(e.mean_noncredible, 2) << '\n';
  }
  return out.str();
}

std::string render_feature_table_tsv(const std::vector<EffectSize>& effects,
                                     const ReportSpec& spec) {
  std::ostringstream out;
  out << "feature\tname\td\tmean_credible\tmean_noncredible\n";
  for (const auto& e : table_rows(effects, spec)) {
    const auto f = feature_index(e.id);
    out << e.id << '\t' << (f ? std::string(kInventory[*f].name) : e.id) << '\t'
        << format_fixed(std::fabs(e.d), 2) << '\t' << format_fixed(e.mean_credible, 2) << '\t'
        << format_fixed(e.mean_noncredible, 2) << '\n';
  }
  return out.str();
}

namespace {

constexpr double kBarWidth = 14.0;
constexpr double kPairGap = 2.0;
constexpr double kDimGap = 10.0;
constexpr double kTopicGap = 30.0;
constexpr double kLeft = 70.0;
constexpr double kTop = 50.0;
constexpr double kPlotHeight = 300.0;
constexpr double kBottom = 80.0;
constexpr const char* kCredibleColor = "#1f77b4";
constexpr const char* kNonCredibleColor = "#d62728";

std::string num(double v) { return format_fixed(v, 2); }

std::vector<TopicProfile> chart_order(const std::vector<TopicProfile>& profiles,
                                      const ReportSpec& spec) {
  std::vector<TopicProfile> out;
  for (const auto& p : profiles) {
    if (spec.wants(p.topic)) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const TopicProfile& a, const TopicProfile& b) {
    return to_string(a.topic) < to_string(b.topic);
  });
  return out;
}

}  // namespace

std::string render_dimension_chart(const std::vector<TopicProfile>& profiles,
                                   const ReportSpec& spec) {
  const auto topics = chart_order(profiles, spec);
  const double dims = static_cast<double>(spec.dimensions.size());
  const double group = 2.0 * kBarWidth + kPairGap;
  const double topic_width = dims * group + (dims - 1.0) * kDimGap;
  const double n = static_cast<double>(std::max<std::size_t>(topics.size(), 1));
  const double plot_width = n * topic_width + (n - 1.0) * kTopicGap + 2.0 * kDimGap;
  const double width = kLeft + plot_width + 20.0;
  const double height = kTop + kPlotHeight + kBottom;

  double peak = 0.0;
  for (const auto& p : topics) {
    for (const auto d : spec.dimensions) {
      peak = std::max({peak, std::fabs(p.credible[d]), std::fabs(p.noncredible[d])});
    }
  }
  const double limit = std::max(1.0, std::ceil(peak));
  const double scale = (kPlotHeight / 2.0) / limit;
  const double zero = kTop + kPlotHeight / 2.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << num(width / 2.0)
      << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
         "Mean dimension scores by topic</text>\n";

  // axis and ticks
  svg << "<g class=\"axis\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kTop + kPlotHeight) << "\" stroke=\"#000000\"/>\n";
  for (int k = -2; k <= 2; ++k) {
    const double v = limit * k / 2.0;
    const double y = zero - v * scale;
    svg << "<line x1=\"" << num(kLeft - 4.0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(y) << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << num(kLeft - 6.0) << "\" y=\"" << num(y + 3.0)
        << "\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }
  svg << "<line class=\"zero\" x1=\"" << num(kLeft) << "\" y1=\"" << num(zero) << "\" x2=\""
      << num(kLeft + plot_width) << "\" y2=\"" << num(zero) << "\" stroke=\"#000000\"/>\n";
  svg << "<text x=\"16\" y=\"" << num(zero)
      << "\" transform=\"rotate(-90 16 " << num(zero)
      << ")\" text-anchor=\"middle\">mean dimension score</text>\n";
  svg << "</g>\n";

  svg << "<g class=\"bars\" font-family=\"sans-serif\" font-size=\"10\">\n";
  double x = kLeft + kDimGap;
  for (const auto& p : topics) {
    const std::string topic(to_string(p.topic));
    const double topic_start = x;
    for (const auto d : spec.dimensions) {
      const std::string dim = dimension_name(d);
      const std::pair<const char*, double> bars[] = {{"credible", p.credible[d]},
                                                     {"non-credible", p.noncredible[d]}};
      for (std::size_t b = 0; b < 2; ++b) {
        const double v = bars[b].second;
        const double h = std::fabs(v) * scale;
        const double y = v >= 0.0 ? zero - h : zero;
        const double bx = x + static_cast<double>(b) * (kBarWidth + kPairGap);
        svg << "<rect class=\"" << bars[b].first << "\" data-topic=\"" << topic
            << "\" data-dimension=\"" << dim << "\" data-value=\"" << format_fixed(v, 4)
            << "\" x=\"" << num(bx) << "\" y=\"" << num(y) << "\" width=\"" << num(kBarWidth)
            << "\" height=\"" << num(h) << "\" fill=\""
            << (b == 0 ? kCredibleColor : kNonCredibleColor) << "\"/>\n";
      }
      svg << "<text x=\"" << num(x + group / 2.0) << "\" y=\"" << num(kTop + kPlotHeight + 14.0)
          << "\" text-anchor=\"middle\">" << dim << "</text>\n";
      x += group + kDimGap;
    }
    x += kTopicGap - kDimGap;
    svg << "<text class=\"topic\" x=\"" << num(topic_start + topic_width / 2.0) << "\" y=\""
        << num(kTop + kPlotHeight + 32.0) << "\" text-anchor=\"middle\" font-size=\"12\">" << topic
        << "</text>\n";
  }
  svg << "</g>\n";

  const double ly = height - 20.0;
  svg << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(ly - 10.0)
      << "\" width=\"10\" height=\"10\" fill=\"" << kCredibleColor << "\"/>\n";
  svg << "<text x=\"" << num(kLeft + 14.0) << "\" y=\"" << num(ly) << "\">credible</text>\n";
  svg << "<rect x=\"" << num(kLeft + 90.0) << "\" y=\"" << num(ly - 10.0)
      << "\" width=\"10\" height=\"10\" fill=\"" << kNonCredibleColor << "\"/>\n";
  svg << "<text x=\"" << num(kLeft + 104.0) << "\" y=\"" << num(ly) << "\">non-credible</text>\n";
  svg << "</g>\n";
  svg << "</svg>\n";
  return svg.str();
}

namespace {

constexpr std::string_view kProfileHeader =
    "topic\tlabel\tn\tD1\tD2\tD3\tD4\tD5\tD6\tsd_D1\tsd_D2\tsd_D3\tsd_D4\tsd_D5\tsd_D6\ttext_type";

void profile_row(std::ostream& out, Topic t, Label l, std::size_t n, const DimensionVector& m,
                 const DimensionVector& sd, const std::string& type) {
  out << to_string(t) << '\t' << to_string(l) << '\t' << n;
  for (const double v : m) out << '\t' << format_exact(v);
  for (const double v : sd) out << '\t' << format_exact(v);
  out << '\t' << type << '\n';
}

}  // namespace

void write_profiles(std::ostream& out, const std::vector<TopicProfile>& profiles) {
  out << kProfileHeader << '\n';
  for (const auto& p : profiles) {
    profile_row(out, p.topic, Label::kCredible, p.n_credible, p.credible, p.sd_credible,
                p.type_credible);
    profile_row(out, p.topic, Label::kNonCredible, p.n_noncredible, p.noncredible,
                p.sd_noncredible, p.type_noncredible);
  }
}

std::vector<TopicProfile> read_profiles(std::istream& in) {
  std::vector<TopicProfile> out;
  std::string line;
  std::size_t n = 0;
  bool header = false;
  bool pending = false;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kProfileHeader) throw FormatError("profiles file: unexpected header");
      header = true;
      continue;
    }
    const auto f = split(line, '\t');
    const auto where = "profiles line " + std::to_string(n);
    if (f.size() != 16) throw FormatError(where + ": expected 16 fields");
    const auto topic = parse_topic(f[0]);
    const auto label = parse_label(f[1]);
    if (!topic || !label) throw FormatError(where + ": bad topic or label");
    const bool credible = *label == Label::kCredible;
    if (credible == pending) throw FormatError(where + ": rows must pair credible, non-credible");
    if (credible) out.emplace_back().topic = *topic;
    auto& p = out.back();
    if (p.topic != *topic) throw FormatError(where + ": topic does not match its pair");
    std::size_t count = 0;
    try {
      count = static_cast<std::size_t>(std::stoull(f[2]));
    } catch (const std::exception&) {
      throw FormatError(where + ": bad count");
    }
    auto& m = credible ? p.credible : p.noncredible;
    auto& sd = credible ? p.sd_credible : p.sd_noncredible;
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      m[d] = parse_double(f[3 + d], "dimension mean");
      sd[d] = parse_double(f[9 + d], "dimension sd");
    }
    (credible ? p.n_credible : p.n_noncredible) = count;
    (credible ? p.type_credible : p.type_noncredible) = f[15];
    pending = credible;
  }
  if (!header) throw FormatError("profiles file: missing header");
  if (pending) throw FormatError("profiles file: credible row without a non-credible row");
  return out;
}

std::string render_summary(const SummaryInput& input, const ReportSpec& spec) {
  spec.validate();
  if (!(input.profile_stamp == input.stamp)) {
    throw DataError("version stamp mismatch: profiles have " + input.profile_stamp.str() +
                    ", run has " + input.stamp.str());
  }
  for (const auto& s : input.sections) {
    if (!(s.stamp == input.stamp)) {
      throw DataError("version stamp mismatch in " + std::string(to_string(s.topic)) +
                      " comparison: " + s.stamp.str() + ", run has " + input.stamp.str());
    }
  }
  std::ostringstream out;
  out << "mda-styl report\n";
  out << "run: " << input.run_id << "\n\n";

  out << "[reproducibility]\n";
  out << "versions: " << input.stamp.str() << '\n';
  out << "seed: " << input.seed << '\n';
  out << "window: " << input.window_size << '\n';
  out << "salience threshold: " << format_fixed(input.salience, 2) << '\n';
  out << "notable threshold: " << threshold_text(spec) << '\n';
  out << "dimensions:";
  for (const auto d : spec.dimensions) out << ' ' << dimension_name(d);
  out << "\n\n";

  out << "[corpus]\n";
  out << "topic | credible | non-credible | total\n";
  for (const auto& [topic, c] : input.manifest.per_topic) {
    out << to_string(topic) << " | " << c.credible << " | " << c.non_credible << " | " << c.total()
        << '\n';
  }
  out << "total: " << input.manifest.total << '\n';
  out << "dates: " << input.manifest.date_start.value_or("null") << " to "
      << input.manifest.date_end.value_or("null") << "\n\n";

  if (spec.figure && !input.chart_file.empty()) {
    out << "[figure]\n" << input.chart_file << '\n';
    out << "topic | label | n";
    for (const auto d : spec.dimensions) out << " | " << dimension_name(d);
    out << " | closest text type\n";
    for (const auto& p : chart_order(input.profiles, spec)) {
      for (int k = 0; k < 2; ++k) {
        const bool c = k == 0;
        out << to_string(p.topic) << " | " << (c ? "credible" : "non-credible") << " | "
            << (c ? p.n_credible : p.n_noncredible);
        for (const auto d : spec.dimensions) {
          out << " | " << format_fixed(c ? p.credible[d] : p.noncredible[d], 2);
        }
        out << " | " << (c ? p.type_credible : p.type_noncredible) << '\n';
      }
    }
    out << '\n';
  }

  auto sections = input.sections;
  std::stable_sort(sections.begin(), sections.end(), [](const TopicSection& a, const TopicSection& b) {
    return to_string(a.topic) < to_string(b.topic);
  });
  for (const auto& s : sections) {
    if (!spec.wants(s.topic)) continue;
    const std::string topic(to_string(s.topic));
    out << "[table " << topic << "]\n";
    out << render_feature_table(s.features, spec,
                                "Features which have a notable effect in the " + topic + " news type");
    out << "dimension | Cohen's d | Credible Mean | Non-Credible Mean\n";
    for (const auto& e : s.dimensions) {
      const auto idx = std::find_if(spec.dimensions.begin(), spec.dimensions.end(),
                                    [&](std::size_t d) { return dimension_name(d) == e.id; });
      if (idx == spec.dimensions.end()) continue;
      out << e.id << " | " << format_fixed(e.d, 2) << " | " << format_fixed(e.mean_credible, 2)
          << " | " << format_fixed(e.mean_noncredible, 2) << '\n';
    }
    out << '\n';
  }

  if (!input.notes.empty()) {
    out << "[notes]\n";
    for (const auto& n : input.notes) out << n << '\n';
  }
  return out.str();
}

}  // namespace mdastyl
