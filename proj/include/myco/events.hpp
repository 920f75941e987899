#ifndef MYCO_EVENTS_HPP
#define MYCO_EVENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "myco/grid.hpp"

namespace myco {

enum class EventKind { TipBranch, NetworkBranch, Coalescence };

const char* event_kind_name(EventKind k);

// One atom of the branching/coalescence point processes.
struct EventRecord {
  EventKind kind;
  double time;
  std::optional<std::uint64_t> parent_id;
  std::optional<std::uint64_t> child_id;
  Vec location{0.0, 0.0};
  Vec velocity{0.0, 0.0};  // branch events only
};

// Run-level state at a snapshot time.
struct SnapshotParticle {
  std::uint64_t id;
  Vec x;
  Vec v;
  double birth;
};

struct Snapshot {
  double time = 0.0;
  std::vector<SnapshotParticle> alive;
  std::uint64_t n_total = 0;  // cumulative births + initial N
  double skeleton_mass = 0.0;
  std::uint64_t nutrient_checksum = 0;
};

// NDJSON, one record per line; field order is fixed so logs are
// byte-reproducible.
std::string event_to_json(const EventRecord& e, int dim);
void write_event_log(const std::string& path, const std::vector<EventRecord>& events, int dim);

void write_snapshots_csv(const std::string& path, const std::vector<Snapshot>& snaps, int dim);
void write_snapshot_summary_csv(const std::string& path, const std::vector<Snapshot>& snaps);

}  // namespace myco

#endif
