#pragma once

// Shared fixtures: a hand-built smart-home repository (air conditioner,
// stove, tv, fridge) used across recognition and mining tests. Mirrors
// data/smart_home.json.

#include <string>

#include "smine/smine.hpp"

namespace fixtures {

using namespace smine;

inline Location home() { return {-33.87, 151.21, 100.0}; }
inline Location bedroom() { return {-33.87005, 151.21005, 100.0}; }
inline Location kitchen() { return {-33.87010, 151.21010, 100.0}; }

inline OperationDescription simple_op(std::string name) {
  OperationDescription op;
  op.name = std::move(name);
  op.mode = "one-way";
  return op;
}

inline ServiceDescription air_conditioner() {
  ServiceDescription s;
  s.name = "air_conditioner";
  s.description = "Adjusts room temperature.";
  s.bindings = {"SOAP"};
  s.categories = {"appliance"};

  auto set_temp = simple_op("setTemperature");
  set_temp.description = "Adjusts temperature to a preferred degree.";
  set_temp.categories = {"appliance"};
  set_temp.inputs = {{"temperature", "int", "degree"}};
  set_temp.qualities = {{"availability", "true"}};
  set_temp.precondition.env_constraints = {{"temperature", Comparator::geq, 28.0}};
  set_temp.postcondition.env_constraints = {{"temperature", Comparator::eq, 25.0}};

  auto set_time = simple_op("setTime");
  set_time.inputs = {{"minutes", "int", "minute"}};

  s.operations = {simple_op("On"), simple_op("Off"), set_temp, simple_op("Ventilation"),
                  set_time};
  s.states = {StateRecord{StateKind::ready, {}, {}, {}},
              StateRecord{StateKind::start, 13.5, {}, kitchen()},
              active_state(13.5, 15.0, kitchen()),
              StateRecord{StateKind::end, 15.0, {}, kitchen()}};
  s.people = {Person{"Nancy"}};
  return s;
}

inline ServiceDescription stove() {
  ServiceDescription s;
  s.name = "stove";
  s.description = "Cooking heat source.";
  s.categories = {"kitchen"};
  auto heat = simple_op("heat");
  heat.postcondition.env_constraints = {{"temperature", Comparator::geq, 28.0}};
  s.operations = {heat};
  s.states = {active_state(13.0, 14.5, kitchen())};
  s.people = {Person{"Nancy"}};
  return s;
}

inline ServiceDescription tv() {
  ServiceDescription s;
  s.name = "tv";
  s.description = "Bedroom television.";
  s.categories = {"entertainment"};
  auto set_volume = simple_op("setVolume");
  set_volume.inputs = {{"volume", "int", "level"}};
  auto set_channel = simple_op("setChannel");
  set_channel.inputs = {{"channel", "int", ""}};
  s.operations = {simple_op("On"), set_volume, set_channel};
  s.states = {active_state(9.0, 12.0, bedroom())};
  s.people = {Person{"A"}};
  return s;
}

inline ServiceDescription fridge() {
  ServiceDescription s;
  s.name = "fridge";
  s.description = "Kitchen fridge.";
  s.categories = {"kitchen"};
  s.operations = {simple_op("Open")};
  s.states = {active_state(10.0, 10.083, kitchen())};
  s.people = {Person{"A"}};
  return s;
}

/// Minimal valid service: one no-op operation, one active interval, one person.
inline ServiceDescription simple_service(std::string name, double start, double end,
                                         std::string person, Location loc = home()) {
  ServiceDescription s;
  s.name = std::move(name);
  s.operations = {simple_op("run")};
  s.states = {active_state(start, end, loc)};
  s.people = {Person{std::move(person)}};
  return s;
}

}  // namespace fixtures
