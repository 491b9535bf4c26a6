#include "growth/schedule_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace growth {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ScheduleError(ScheduleErrorCode::kMalformed, 0, path + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

Vertex as_vertex(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  auto x = v.get<long long>();
  if (x < 0 || x > 0x7fffffffLL) bad(path, "vertex id out of range");
  return static_cast<Vertex>(x);
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  return v;
}

}  // namespace

Schedule parse_schedule(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("$", e.what());
  }
  if (!doc.is_object()) bad("$", "expected an object");
  Schedule s;
  const json& d = member(doc, "d", "$");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 1 << 20) {
    bad("$.d", "expected an integer >= 1");
  }
  s.d = d.get<int>();
  s.initiator = as_vertex(member(doc, "initiator", "$"), "$.initiator");
  const json& slots = as_array(member(doc, "slots", "$"), "$.slots");
  std::vector<char> used;
  auto claim = [&](Vertex v, const std::string& path) {
    if (static_cast<std::size_t>(v) >= used.size()) used.resize(std::max<std::size_t>(v + 1, used.size() * 2), 0);
    if (used[v]) bad(path, "duplicate child identifier " + std::to_string(v));
    used[v] = 1;
  };
  claim(s.initiator, "$.initiator");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string sp = "$.slots[" + std::to_string(i) + "]";
    if (!slots[i].is_object()) bad(sp, "expected an object");
    Slot slot;
    const json& gens = as_array(member(slots[i], "gen", sp), sp + ".gen");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::string gp = sp + ".gen[" + std::to_string(j) + "]";
      if (!gens[j].is_object()) bad(gp, "expected an object");
      Generation g;
      g.parent = as_vertex(member(gens[j], "p", gp), gp + ".p");
      g.child = as_vertex(member(gens[j], "c", gp), gp + ".c");
      claim(g.child, gp + ".c");
      const json& act = as_array(member(gens[j], "act", gp), gp + ".act");
      for (std::size_t a = 0; a < act.size(); ++a) {
        g.activated.push_back(as_vertex(act[a], gp + ".act[" + std::to_string(a) + "]"));
      }
      slot.generations.push_back(std::move(g));
    }
    if (slots[i].contains("del")) {
      const json& dels = as_array(slots[i]["del"], sp + ".del");
      for (std::size_t j = 0; j < dels.size(); ++j) {
        const std::string dp = sp + ".del[" + std::to_string(j) + "]";
        if (!dels[j].is_array() || dels[j].size() != 2) bad(dp, "expected a pair [u, v]");
        Vertex a = as_vertex(dels[j][0], dp + "[0]");
        Vertex b = as_vertex(dels[j][1], dp + "[1]");
        if (a == b) bad(dp, "self-loop");
        slot.deletions.emplace_back(a, b);
      }
    }
    s.slots.push_back(std::move(slot));
  }
  return s;
}

std::string emit_schedule(const Schedule& s, int indent) {
  json slots = json::array();
  for (const Slot& slot : s.slots) {
    json gens = json::array();
    for (const Generation& g : slot.generations) {
      auto act = g.activated;
      std::sort(act.begin(), act.end());
      gens.push_back({{"p", g.parent}, {"c", g.child}, {"act", act}});
    }
    auto dels = slot.deletions;
    std::sort(dels.begin(), dels.end());
    json del = json::array();
    for (const Edge& e : dels) del.push_back({e.u, e.v});
    slots.push_back({{"gen", std::move(gens)}, {"del", std::move(del)}});
  }
  json doc = {{"d", s.d}, {"initiator", s.initiator}, {"slots", std::move(slots)}};
  return doc.dump(indent);
}

}  // namespace growth
