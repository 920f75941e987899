#include "myco/events.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace myco {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::TipBranch: return "TipBranch";
    case EventKind::NetworkBranch: return "NetworkBranch";
    case EventKind::Coalescence: return "Coalescence";
  }
  return "?";
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void append_vec(std::ostringstream& o, const Vec& v, int dim) {
  o << "[";
  for (int a = 0; a < dim; ++a) {
    if (a) o << ",";
    o << num(v[a]);
  }
  o << "]";
}

}  // namespace

std::string event_to_json(const EventRecord& e, int dim) {
  std::ostringstream o;
  o << "{\"kind\":\"" << event_kind_name(e.kind) << "\",\"time\":" << num(e.time);
  if (e.parent_id) o << ",\"parent_id\":" << *e.parent_id;
  if (e.child_id) o << ",\"child_id\":" << *e.child_id;
  o << ",\"location\":";
  append_vec(o, e.location, dim);
  if (e.kind != EventKind::Coalescence) {
    o << ",\"velocity\":";
    append_vec(o, e.velocity, dim);
  }
  o << "}";
  return o.str();
}

void write_event_log(const std::string& path, const std::vector<EventRecord>& events, int dim) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& e : events) f << event_to_json(e, dim) << "\n";
}

void write_snapshots_csv(const std::string& path, const std::vector<Snapshot>& snaps, int dim) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << "t,id";
  for (int a = 0; a < dim; ++a) f << ",x" << a;
  for (int a = 0; a < dim; ++a) f << ",v" << a;
  f << ",birth\n";
  for (const auto& s : snaps) {
    for (const auto& p : s.alive) {
      f << num(s.time) << "," << p.id;
      for (int a = 0; a < dim; ++a) f << "," << num(p.x[a]);
      for (int a = 0; a < dim; ++a) f << "," << num(p.v[a]);
      f << "," << num(p.birth) << "\n";
    }
  }
}

void write_snapshot_summary_csv(const std::string& path, const std::vector<Snapshot>& snaps) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << "t,n_total,n_alive,skeleton_mass,nutrient_checksum\n";
  for (const auto& s : snaps) {
    f << num(s.time) << "," << s.n_total << "," << s.alive.size() << ","
      << num(s.skeleton_mass) << "," << s.nutrient_checksum << "\n";
  }
}

}  // namespace myco
