#include "tlteach/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tlteach {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string number(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

json demo_json(const Demonstration& d, const StateDomain& dom) {
  return json{{"trajectory", format_trajectory(d.trajectory, dom)}, {"label", to_int(d.label)}};
}

Demonstration demo_from(const json& j, const StateDomain& dom) {
  Demonstration d;
  d.trajectory = parse_trajectory(j.at("trajectory").get<std::string>(), dom);
  d.label = j.at("label").get<int>() > 0 ? DemoLabel::Positive : DemoLabel::Negative;
  return d;
}

json transcript_json(const TeachingTranscript& t, const StateDomain& dom) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"demo", demo_json(s.demo, dom)},
                     {"eliminated", s.eliminated},
                     {"kappa", s.kappa},
                     {"preferred_size", s.preferred_size},
                     {"hypothesis_before", s.hypothesis_before},
                     {"hypothesis_after", s.hypothesis_after},
                     {"intermediate", s.intermediate},
                     {"lower_bound", s.lower_bound},
                     {"solver_ms", s.solver_ms},
                     {"nodes", s.nodes},
                     {"budget_exhausted", s.budget_exhausted}});
  }
  json demos = json::array();
  for (const auto& d : t.demos) demos.push_back(demo_json(d, dom));
  return {{"initial", t.initial},
          {"target", t.target},
          {"demos", demos},
          {"hypothesis_path", t.hypothesis_path},
          {"an_cost", t.an_cost},
          {"al_cost", t.al_cost},
          {"reached_target", t.reached_target},
          {"status", status_name(t.status)},
          {"steps", steps},
          {"solver_ms", t.solver_ms}};
}

TeachingTranscript transcript_from(const json& j, const StateDomain& dom) {
  TeachingTranscript t;
  t.initial = j.at("initial").get<std::size_t>();
  t.target = j.at("target").get<std::size_t>();
  for (const auto& d : j.at("demos")) t.demos.push_back(demo_from(d, dom));
  t.hypothesis_path = j.at("hypothesis_path").get<std::vector<std::size_t>>();
  t.an_cost = j.at("an_cost").get<std::size_t>();
  t.al_cost = j.at("al_cost").get<std::size_t>();
  t.reached_target = j.at("reached_target").get<bool>();
  t.status = status_from_name(j.at("status").get<std::string>());
  for (const auto& s : j.at("steps")) {
    StepRecord r;
    r.demo = demo_from(s.at("demo"), dom);
    r.eliminated = s.at("eliminated").get<IdList>();
    r.kappa = s.at("kappa").get<std::size_t>();
    r.preferred_size = s.at("preferred_size").get<std::size_t>();
    r.hypothesis_before = s.at("hypothesis_before").get<std::size_t>();
    r.hypothesis_after = s.at("hypothesis_after").get<std::size_t>();
    r.intermediate = s.at("intermediate").get<std::size_t>();
    r.lower_bound = s.at("lower_bound").get<std::uint64_t>();
    r.solver_ms = s.at("solver_ms").get<double>();
    r.nodes = s.at("nodes").get<std::uint64_t>();
    r.budget_exhausted = s.at("budget_exhausted").get<bool>();
    t.steps.push_back(std::move(r));
  }
  t.solver_ms = j.at("solver_ms").get<double>();
  return t;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

StateDomain report_domain(const std::string& name) {
  if (name == "numeric") return numeric_domain(10);
  if (name == "gridworld") {
    std::vector<std::string> names;
    for (Color c : kColors) names.emplace_back(color_name(c));
    return symbolic_domain(names);
  }
  if (name == "suit") return suit_domain();
  throw std::invalid_argument("unknown report domain '" + name + "'");
}

std::string to_csv(const ExperimentReport& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& s : r.sessions) {
    out += csv_field(s.suite) + "," + csv_field(s.method) + "," + std::to_string(s.a) + "," +
           std::to_string(s.session) + "," + std::to_string(s.transcript.an_cost) + "," +
           std::to_string(s.transcript.al_cost) + "," + std::to_string(s.transcript.steps.size()) + "," +
           number(s.transcript.solver_ms) + "," + (s.timeout ? "TIMEOUT" : s.completed ? "true" : "false") + "\n";
  }
  return out;
}

std::string summary_csv(const ExperimentReport& r) {
  std::string out = "suite,method,a,sessions,completed,mean_an,min_an,max_an,mean_al,min_al,max_al,mean_step_ms\n";
  for (const auto& m : r.summaries) {
    out += csv_field(r.suite) + "," + csv_field(m.method) + "," + std::to_string(m.a) + "," +
           std::to_string(m.sessions) + "," + std::to_string(m.completed) + "," + number(m.mean_an) + "," +
           std::to_string(m.min_an) + "," + std::to_string(m.max_an) + "," + number(m.mean_al) + "," +
           std::to_string(m.min_al) + "," + std::to_string(m.max_al) + "," + number(m.mean_step_ms) + "\n";
  }
  if (!r.deltas.empty()) {
    out += "\nsuite,a,metric,base,other,base_mean,other_mean,relative\n";
    for (const auto& d : r.deltas) {
      out += csv_field(r.suite) + "," + std::to_string(d.a) + "," + d.metric + "," + csv_field(d.base) + "," +
             csv_field(d.other) + "," + number(d.base_mean) + "," + number(d.other_mean) + "," +
             number(d.relative) + "\n";
    }
  }
  return out;
}

std::string to_json(const ExperimentReport& r) {
  const StateDomain dom = report_domain(r.domain);
  json sessions = json::array();
  for (const auto& s : r.sessions) {
    sessions.push_back({{"suite", s.suite},
                        {"method", s.method},
                        {"a", s.a},
                        {"session", s.session},
                        {"seed", s.seed},
                        {"initial_id", s.initial_id},
                        {"target_id", s.target_id},
                        {"initial", s.initial},
                        {"target", s.target},
                        {"transcript", transcript_json(s.transcript, dom)},
                        {"completed", s.completed},
                        {"timeout", s.timeout},
                        {"note", s.note}});
  }
  json summaries = json::array();
  for (const auto& m : r.summaries) {
    summaries.push_back({{"method", m.method},
                         {"a", m.a},
                         {"sessions", m.sessions},
                         {"completed", m.completed},
                         {"mean_an", m.mean_an},
                         {"mean_al", m.mean_al},
                         {"min_an", m.min_an},
                         {"max_an", m.max_an},
                         {"min_al", m.min_al},
                         {"max_al", m.max_al},
                         {"mean_step_ms", m.mean_step_ms}});
  }
  json deltas = json::array();
  for (const auto& d : r.deltas) {
    deltas.push_back({{"a", d.a},
                      {"metric", d.metric},
                      {"base", d.base},
                      {"other", d.other},
                      {"base_mean", d.base_mean},
                      {"other_mean", d.other_mean},
                      {"relative", d.relative}});
  }
  json j{{"suite", r.suite}, {"domain", r.domain}, {"sessions", sessions}, {"summaries", summaries},
         {"deltas", deltas}};
  return j.dump(2);
}

ExperimentReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentReport r;
  r.suite = j.at("suite").get<std::string>();
  r.domain = j.at("domain").get<std::string>();
  const StateDomain dom = report_domain(r.domain);
  for (const auto& s : j.at("sessions")) {
    SessionRecord x;
    x.suite = s.at("suite").get<std::string>();
    x.method = s.at("method").get<std::string>();
    x.a = s.at("a").get<std::uint64_t>();
    x.session = s.at("session").get<std::size_t>();
    x.seed = s.at("seed").get<std::uint64_t>();
    x.initial_id = s.at("initial_id").get<std::size_t>();
    x.target_id = s.at("target_id").get<std::size_t>();
    x.initial = s.at("initial").get<std::string>();
    x.target = s.at("target").get<std::string>();
    x.transcript = transcript_from(s.at("transcript"), dom);
    x.completed = s.at("completed").get<bool>();
    x.timeout = s.at("timeout").get<bool>();
    x.note = s.at("note").get<std::string>();
    r.sessions.push_back(std::move(x));
  }
  for (const auto& m : j.at("summaries")) {
    MethodSummary x;
    x.method = m.at("method").get<std::string>();
    x.a = m.at("a").get<std::uint64_t>();
    x.sessions = m.at("sessions").get<std::size_t>();
    x.completed = m.at("completed").get<std::size_t>();
    x.mean_an = m.at("mean_an").get<double>();
    x.mean_al = m.at("mean_al").get<double>();
    x.min_an = m.at("min_an").get<std::size_t>();
    x.max_an = m.at("max_an").get<std::size_t>();
    x.min_al = m.at("min_al").get<std::size_t>();
    x.max_al = m.at("max_al").get<std::size_t>();
    x.mean_step_ms = m.at("mean_step_ms").get<double>();
    r.summaries.push_back(std::move(x));
  }
  for (const auto& d : j.at("deltas")) {
    Delta x;
    x.a = d.at("a").get<std::uint64_t>();
    x.metric = d.at("metric").get<std::string>();
    x.base = d.at("base").get<std::string>();
    x.other = d.at("other").get<std::string>();
    x.base_mean = d.at("base_mean").get<double>();
    x.other_mean = d.at("other_mean").get<double>();
    x.relative = d.at("relative").get<double>();
    r.deltas.push_back(std::move(x));
  }
  return r;
}

std::vector<std::string> emit(const ExperimentReport& r, ReportFormat format, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
  const std::filesystem::path base(dir);
  const std::string stem = r.suite.empty() ? "report" : r.suite;
  std::vector<std::string> written;
  if (format == ReportFormat::Json) {
    const auto p = base / (stem + ".json");
    write_file(p, to_json(r));
    written.push_back(p.string());
  } else {
    const auto p = base / (stem + ".csv");
    write_file(p, to_csv(r));
    written.push_back(p.string());
    const auto q = base / (stem + "_summary.csv");
    write_file(q, summary_csv(r));
    written.push_back(q.string());
  }
  return written;
}

}  // namespace tlteach
