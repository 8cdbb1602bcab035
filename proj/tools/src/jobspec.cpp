#include "jobspec.hpp"

#include <set>

#include <json.hpp>

#include "ellcarm/errors.hpp"

namespace ellcarm::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands{"classify", "verify-examples", "anomalous", "density",
                                      "census",   "lemmas",          "trichotomy"};

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ParseError("job spec field '" + field + "': " + why);
}

std::string as_text(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  bad_field(field, "expected a string or integer, got " + v.dump());
}

std::uint64_t as_count(const json& v, const std::string& field) {
  const std::string text = as_text(v, field);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    bad_field(field, "expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    bad_field(field, "out of range: " + text);
  }
}

template <class F>
auto with_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind("job spec field", 0) == 0) throw;
    bad_field(field, e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput("job spec field '" + field + "': " + e.what());
  }
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw ParseError("format must be json or csv, got '" + text + "'");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

JobSpec parse_job_spec(const std::string& json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("job spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("job spec must be a JSON object");

  JobSpec spec;
  if (!j.contains("command")) bad_field("command", "missing");
  spec.command = as_text(j["command"], "command");
  if (!kCommands.count(spec.command)) bad_field("command", "unknown command '" + spec.command + "'");

  for (const auto& [key, v] : j.items()) {
    if (key == "command") continue;
    if (key == "curve") {
      spec.curve = as_text(v, key);
      with_field(key, [&] { return parse_curve(*spec.curve); });
    } else if (key == "n") {
      spec.N = with_field(key, [&] { return parse_integer(as_text(v, key)); });
    } else if (key == "point") {
      spec.point = with_field(key, [&] { return parse_point(as_text(v, key)); });
    } else if (key == "d") {
      spec.d = with_field(key, [&] {
        const mpz_class d = parse_integer(as_text(v, key));
        if (!d.fits_slong_p() || d <= 0) bad_field(key, "expected a positive integer");
        return d.get_si();
      });
    } else if (key == "p") {
      spec.p = as_count(v, key);
    } else if (key == "max") {
      spec.max = as_count(v, key);
    } else if (key == "m") {
      spec.m = as_count(v, key);
    } else if (key == "trials") {
      spec.trials = as_count(v, key);
    } else if (key == "seed") {
      spec.seed = as_count(v, key);
    } else if (key == "products") {
      if (!v.is_boolean()) bad_field(key, "expected true or false");
      spec.products = v.get<bool>();
    } else if (key == "out") {
      spec.out = as_text(v, key);
      if (spec.out->empty()) bad_field(key, "empty path");
    } else if (key == "format") {
      spec.format = with_field(key, [&] { return parse_format(as_text(v, key)); });
    } else {
      bad_field(key, "unknown field");
    }
  }
  return spec;
}

std::string to_json(const JobSpec& spec) {
  nlohmann::ordered_json j;
  j["command"] = spec.command;
  if (spec.curve) j["curve"] = *spec.curve;
  if (spec.N) j["n"] = spec.N->get_str();
  if (spec.point) j["point"] = spec.point->x.get_str() + "," + spec.point->y.get_str();
  if (spec.d) j["d"] = std::to_string(*spec.d);
  if (spec.p) j["p"] = std::to_string(*spec.p);
  if (spec.max) j["max"] = std::to_string(*spec.max);
  if (spec.m) j["m"] = std::to_string(*spec.m);
  if (spec.trials) j["trials"] = std::to_string(*spec.trials);
  j["seed"] = std::to_string(spec.seed);
  if (spec.products) j["products"] = true;
  if (spec.out) j["out"] = *spec.out;
  j["format"] = to_string(spec.format);
  return j.dump();
}

}  // namespace ellcarm::cli
