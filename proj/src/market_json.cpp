#include "wlab/market_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wlab {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ParseError("market schema violation at '" + field + "': " + why);
}

const json& get_field(const json& obj, const std::string& key,
                      const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

int get_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = get_field(obj, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

double get_real(const json& obj, const std::string& key, const std::string& path) {
  const json& v = get_field(obj, key, path);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::vector<double> get_reals(const json& obj, const std::string& key,
                              const std::string& path) {
  const json& v = get_field(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(path + "." + key, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

ItemSet items_to_set(const json& arr, int m, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of item indices");
  ItemSet s;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) fail(path, "expected integer item indices");
    int j = x.get<int>();
    if (j < 0 || j >= m) fail(path, "item index out of range");
    s = s.plus(j);
  }
  return s;
}

std::vector<ItemSet> get_parts(const json& obj, const std::string& key, int m,
                               const std::string& path) {
  const json& v = get_field(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array of item arrays");
  std::vector<ItemSet> parts;
  for (std::size_t i = 0; i < v.size(); ++i)
    parts.push_back(items_to_set(v[i], m, path + "." + key + "[" + std::to_string(i) + "]"));
  return parts;
}

Valuation parse_player(const json& spec, int m, const std::string& path);

Matroid parse_matroid(const json& obj, int m, const std::string& path) {
  const json& t = get_field(obj, "type", path);
  if (!t.is_string()) fail(path + ".type", "expected a string");
  std::string type = t.get<std::string>();
  try {
    if (type == "uniform") return Matroid::uniform(m, get_int(obj, "k", path));
    if (type == "partition")
      return Matroid::partition(m, get_parts(obj, "parts", m, path), [&] {
        const json& caps = get_field(obj, "capacities", path);
        if (!caps.is_array()) fail(path + ".capacities", "expected an array");
        std::vector<int> out;
        for (const auto& c : caps) {
          if (!c.is_number_integer()) fail(path + ".capacities", "expected integers");
          out.push_back(c.get<int>());
        }
        return out;
      }());
    if (type == "explicit")
      return Matroid::explicit_family(m, get_parts(obj, "sets", m, path));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".type", "unknown matroid type '" + type + "'");
}

Valuation parse_player(const json& spec, int m, const std::string& path) {
  const json& k = get_field(spec, "kind", path);
  if (!k.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = k.get<std::string>();
  try {
    if (kind == "linear" || kind == "additive") {
      LinearValuation v;
      v.l = get_reals(spec, "l", path);
      v.c = kind == "linear" && spec.contains("c") ? get_real(spec, "c", path) : 0.0;
      if (kind == "additive" && spec.contains("c") && get_real(spec, "c", path) != 0.0)
        fail(path + ".c", "additive valuations must have c = 0");
      return Valuation(m, std::move(v));
    }
    if (kind == "unit_demand")
      return Valuation(m, UnitDemandValuation{get_reals(spec, "rho", path)});
    if (kind == "weighted_matroid_rank") {
      WeightedMatroidRankValuation v;
      v.w = get_reals(spec, "w", path);
      v.matroid = parse_matroid(get_field(spec, "matroid", path), m, path + ".matroid");
      return Valuation(m, std::move(v));
    }
    if (kind == "transversal") {
      TransversalValuation v;
      v.parts = get_parts(spec, "parts", m, path);
      for (double x : get_reals(spec, "r", path)) {
        if (x != 0.0 && x != 1.0) fail(path + ".r", "entries must be 0 or 1");
        v.r.push_back(static_cast<int>(x));
      }
      return Valuation(m, std::move(v));
    }
    if (kind == "xos") {
      XosValuation v;
      const json& cl = get_field(spec, "clauses", path);
      if (!cl.is_array() || cl.empty())
        fail(path + ".clauses", "expected a non-empty array of coefficient arrays");
      for (std::size_t i = 0; i < cl.size(); ++i) {
        const auto& a = cl[i];
        if (!a.is_array()) fail(path + ".clauses", "expected coefficient arrays");
        std::vector<double> coeffs;
        for (const auto& x : a) {
          if (!x.is_number()) fail(path + ".clauses", "expected numbers");
          coeffs.push_back(x.get<double>());
        }
        v.clauses.push_back(std::move(coeffs));
      }
      return Valuation(m, std::move(v));
    }
    if (kind == "coverage") {
      CoverageValuation v;
      const json& regions = get_field(spec, "regions", path);
      if (!regions.is_array()) fail(path + ".regions", "expected an array");
      for (std::size_t i = 0; i < regions.size(); ++i) {
        std::string rp = path + ".regions[" + std::to_string(i) + "]";
        CoverageValuation::Region reg;
        reg.w = get_real(regions[i], "w", rp);
        reg.covered_by = items_to_set(get_field(regions[i], "items", rp), m, rp + ".items");
        v.regions.push_back(reg);
      }
      return Valuation(m, std::move(v));
    }
    if (kind == "table")
      return Valuation(m, TableValuation{get_reals(spec, "values", path)});
    if (kind == "perturbed") {
      PerturbedValuation v;
      v.base = std::make_shared<Valuation>(
          parse_player(get_field(spec, "base", path), m, path + ".base"));
      v.eps = get_real(spec, "eps", path);
      v.factors = get_reals(spec, "factors", path);
      return Valuation(m, std::move(v));
    }
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown valuation kind '" + kind + "'");
}

json matroid_to_json(const Matroid& mt) {
  json out;
  switch (mt.kind) {
    case Matroid::Kind::Uniform:
      out["type"] = "uniform";
      out["k"] = mt.rank;
      break;
    case Matroid::Kind::Partition: {
      out["type"] = "partition";
      json parts = json::array();
      for (ItemSet p : mt.parts) parts.push_back(p.items());
      out["parts"] = parts;
      out["capacities"] = mt.capacities;
      break;
    }
    case Matroid::Kind::Explicit: {
      out["type"] = "explicit";
      json sets = json::array();
      for (ItemSet s : mt.sets) sets.push_back(s.items());
      out["sets"] = sets;
      break;
    }
  }
  return out;
}

json player_to_json(const Valuation& v) {
  json out;
  out["kind"] = std::string(v.kind());
  if (const auto* lin = v.as<LinearValuation>()) {
    out["c"] = lin->c;
    out["l"] = lin->l;
  } else if (const auto* ud = v.as<UnitDemandValuation>()) {
    out["rho"] = ud->rho;
  } else if (const auto* wmr = v.as<WeightedMatroidRankValuation>()) {
    out["w"] = wmr->w;
    out["matroid"] = matroid_to_json(wmr->matroid);
  } else if (const auto* tr = v.as<TransversalValuation>()) {
    json parts = json::array();
    for (ItemSet p : tr->parts) parts.push_back(p.items());
    out["parts"] = parts;
    out["r"] = tr->r;
  } else if (const auto* xos = v.as<XosValuation>()) {
    out["clauses"] = xos->clauses;
  } else if (const auto* cov = v.as<CoverageValuation>()) {
    json regions = json::array();
    for (const auto& reg : cov->regions) {
      json r;
      r["w"] = reg.w;
      r["items"] = reg.covered_by.items();
      regions.push_back(r);
    }
    out["regions"] = regions;
  } else if (const auto* tab = v.as<TableValuation>()) {
    out["values"] = tab->values;
  } else if (const auto* pert = v.as<PerturbedValuation>()) {
    out["base"] = player_to_json(*pert->base);
    out["eps"] = pert->eps;
    out["factors"] = pert->factors;
  }
  return out;
}

}  // namespace

Market parse_market(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("market is not valid JSON: ") + e.what());
  }
  Market mkt;
  mkt.m = get_int(doc, "m", "market");
  if (mkt.m < 1) fail("market.m", "must be at least 1");
  if (mkt.m > kMaxItems) fail("market.m", "must be at most 24");
  const json& players = get_field(doc, "players", "market");
  if (!players.is_array() || players.empty())
    fail("market.players", "expected a non-empty array");
  for (std::size_t i = 0; i < players.size(); ++i)
    mkt.players.push_back(
        parse_player(players[i], mkt.m, "market.players[" + std::to_string(i) + "]"));
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (labels.contains("items"))
      mkt.item_labels = labels["items"].get<std::vector<std::string>>();
    if (labels.contains("players"))
      mkt.player_labels = labels["players"].get<std::vector<std::string>>();
  }
  try {
    mkt.validate();
  } catch (const std::invalid_argument& e) {
    fail("market", e.what());
  }
  return mkt;
}

Market load_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open market file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_market(ss.str());
}

std::string serialize_market(const Market& mkt) {
  json out;
  out["m"] = mkt.m;
  json players = json::array();
  for (const Valuation& v : mkt.players) players.push_back(player_to_json(v));
  out["players"] = players;
  if (!mkt.item_labels.empty() || !mkt.player_labels.empty()) {
    json labels;
    if (!mkt.item_labels.empty()) labels["items"] = mkt.item_labels;
    if (!mkt.player_labels.empty()) labels["players"] = mkt.player_labels;
    out["labels"] = labels;
  }
  return out.dump(2);
}

}  // namespace wlab
