#include "avogrip/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "avogrip/errors.hpp"

namespace avogrip {

std::string_view to_string(SizeGroup g) {
  switch (g) {
    case SizeGroup::Small: return "Small";
    case SizeGroup::Medium: return "Medium";
    case SizeGroup::Large: return "Large";
  }
  return "?";
}

SizeGroup parse_size_group(std::string_view text) {
  if (text == "Small") return SizeGroup::Small;
  if (text == "Medium") return SizeGroup::Medium;
  if (text == "Large") return SizeGroup::Large;
  throw DomainError("group", "expected Small, Medium or Large, got '" + std::string(text) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Rows of a CSV stream with comments and blanks dropped, each tagged with its line number.
struct Row {
  std::size_t line;
  std::string text;
};

std::vector<Row> read_rows(std::istream& in, std::string_view expected_header) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header_seen) {
      if (t != expected_header)
        throw ParseError(line_no, "header", "expected '" + std::string(expected_header) + "'");
      header_seen = true;
      continue;
    }
    rows.push_back(Row{line_no, std::string(t)});
  }
  if (!header_seen) throw ParseError(line_no, "header", "missing header row");
  return rows;
}

double parse_double(std::string_view s, std::size_t line, const char* field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError(line, field, "not a number: '" + std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s, std::size_t line, const char* field) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, field, "not an integer: '" + std::string(s) + "'");
  return v;
}

template <class Enum, class Parser>
Enum parse_enum(Parser parser, std::string_view s, std::size_t line, const char* field) {
  try {
    return parser(s);
  } catch (const DomainError& e) {
    throw ParseError(line, field, e.what());
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<DetachmentRecord> load_detachment_records(std::istream& in) {
  std::vector<DetachmentRecord> out;
  std::set<int> seen;
  for (const Row& row : read_rows(in, "sample_no,viewpoint,force_n,b_mm,h_mm")) {
    const auto f = split(row.text);
    if (f.size() != 5)
      throw ParseError(row.line, "row", "expected 5 fields, got " + std::to_string(f.size()));
    DetachmentRecord r;
    r.sample_no = parse_int(f[0], row.line, "sample_no");
    r.viewpoint = parse_enum<Viewpoint>(parse_viewpoint, f[1], row.line, "viewpoint");
    r.force = parse_double(f[2], row.line, "force_n");
    r.width = parse_double(f[3], row.line, "b_mm");
    r.height = parse_double(f[4], row.line, "h_mm");
    if (!(r.force > 0.0)) throw IntegrityError(row.line, "force_n must be positive");
    if (!(r.width > 0.0) || !(r.height > 0.0))
      throw IntegrityError(row.line, "b_mm and h_mm must be positive");
    if (!seen.insert(r.sample_no).second)
      throw IntegrityError(row.line, "duplicate sample_no " + std::to_string(r.sample_no));
    out.push_back(r);
  }
  return out;
}

std::vector<GraspTrial> load_grasp_trials(std::istream& in) {
  std::vector<GraspTrial> out;
  std::set<std::pair<Viewpoint, int>> seen;
  for (const Row& row : read_rows(in, "sample_no,group,viewpoint,b_mm,h_mm,rotation_deg")) {
    const auto f = split(row.text);
    if (f.size() != 6)
      throw ParseError(row.line, "row", "expected 6 fields, got " + std::to_string(f.size()));
    GraspTrial t;
    t.sample_no = parse_int(f[0], row.line, "sample_no");
    t.group = parse_enum<SizeGroup>(parse_size_group, f[1], row.line, "group");
    t.viewpoint = parse_enum<Viewpoint>(parse_viewpoint, f[2], row.line, "viewpoint");
    t.width = parse_double(f[3], row.line, "b_mm");
    t.height = parse_double(f[4], row.line, "h_mm");
    t.rotation = parse_double(f[5], row.line, "rotation_deg");
    if (t.viewpoint == Viewpoint::BV)
      throw IntegrityError(row.line, "grasp trials are FV or CV only");
    if (!(t.rotation > 0.0 && t.rotation < 360.0))
      throw IntegrityError(row.line, "rotation_deg must lie in (0, 360)");
    if (!(t.width > 0.0) || !(t.height > 0.0))
      throw IntegrityError(row.line, "b_mm and h_mm must be positive");
    if (!seen.insert({t.viewpoint, t.sample_no}).second)
      throw IntegrityError(row.line, "duplicate sample_no " + std::to_string(t.sample_no) +
                                         " for viewpoint " + std::string(to_string(t.viewpoint)));
    out.push_back(t);
  }
  return out;
}

void write_detachment_records(std::ostream& out, std::span<const DetachmentRecord> records) {
  out << "sample_no,viewpoint,force_n,b_mm,h_mm\n";
  for (const auto& r : records)
    out << r.sample_no << ',' << to_string(r.viewpoint) << ',' << format_number(r.force) << ','
        << format_number(r.width) << ',' << format_number(r.height) << '\n';
}

void write_grasp_trials(std::ostream& out, std::span<const GraspTrial> trials) {
  out << "sample_no,group,viewpoint,b_mm,h_mm,rotation_deg\n";
  for (const auto& t : trials)
    out << t.sample_no << ',' << to_string(t.group) << ',' << to_string(t.viewpoint) << ','
        << format_number(t.width) << ',' << format_number(t.height) << ','
        << format_number(t.rotation) << '\n';
}

namespace {

// Order-independent mean: sort first so the floating-point sum is the same for any permutation.
double stable_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<ViewpointStats> viewpoint_stats(std::span<const DetachmentRecord> records) {
  std::vector<ViewpointStats> out;
  for (Viewpoint v : {Viewpoint::FV, Viewpoint::CV, Viewpoint::BV}) {
    std::vector<double> forces;
    for (const auto& r : records)
      if (r.viewpoint == v) forces.push_back(r.force);
    if (forces.empty()) continue;
    ViewpointStats s;
    s.viewpoint = v;
    s.count = forces.size();
    s.min = *std::min_element(forces.begin(), forces.end());
    s.max = *std::max_element(forces.begin(), forces.end());
    s.mean = stable_mean(std::move(forces));
    out.push_back(s);
  }
  return out;
}

const RotationCell* RotationStats::find(SizeGroup g, Viewpoint v) const {
  for (const auto& c : cells)
    if (c.group == g && c.viewpoint == v) return &c;
  return nullptr;
}

std::optional<double> RotationStats::ratio(SizeGroup g) const {
  for (const auto& r : ratios)
    if (r.group == g) return r.cv_over_fv;
  return std::nullopt;
}

RotationStats group_rotation_stats(std::span<const GraspTrial> trials) {
  if (trials.empty()) throw DomainError("trials", "at least one trial required");
  RotationStats stats;
  for (SizeGroup g : kSizeGroups) {
    bool any = false;
    for (Viewpoint v : {Viewpoint::FV, Viewpoint::CV}) {
      std::vector<double> rot, w, h;
      for (const auto& t : trials) {
        if (t.group != g || t.viewpoint != v) continue;
        rot.push_back(t.rotation);
        w.push_back(t.width);
        h.push_back(t.height);
      }
      if (rot.empty()) continue;
      any = true;
      stats.cells.push_back(RotationCell{g, v, rot.size(), stable_mean(rot), stable_mean(w),
                                         stable_mean(h)});
    }
    if (!any) continue;
    GroupRatio ratio{g, std::nullopt};
    const RotationCell* fv = stats.find(g, Viewpoint::FV);
    const RotationCell* cv = stats.find(g, Viewpoint::CV);
    if (fv && cv) ratio.cv_over_fv = round_to(cv->mean_rotation / fv->mean_rotation, 3);
    stats.ratios.push_back(ratio);
  }
  return stats;
}

double round_to(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(value * scale) / scale;
}

double required_rotation(std::span<const GraspTrial> trials, double width_mm, double height_mm,
                         Viewpoint viewpoint) {
  if (viewpoint == Viewpoint::BV)
    throw UnavailableModel("no rotation model for viewpoint BV");
  std::vector<GraspTrial> subset;
  for (const auto& t : trials)
    if (t.viewpoint == viewpoint) subset.push_back(t);
  if (subset.empty())
    throw UnavailableModel("no trials for viewpoint " + std::string(to_string(viewpoint)));

  const RotationStats stats = group_rotation_stats(subset);
  const RotationCell* best = nullptr;
  double best_dist = 0.0;
  // Groups ascend Small..Large, so '<=' hands ties to the larger group.
  for (const auto& c : stats.cells) {
    const double dist = std::hypot(c.mean_width - width_mm, c.mean_height - height_mm);
    if (!best || dist <= best_dist) {
      best = &c;
      best_dist = dist;
    }
  }
  return best->mean_rotation;
}

}  // namespace avogrip
