#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awplan {

/// Base class for every error raised on invalid input. Callers at the CLI
/// boundary catch this and map it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TopologyError : public Error {
 public:
  using Error::Error;
};

class SpectrumError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

class PlanningError : public Error {
 public:
  using Error::Error;
};

class AdaptationError : public Error {
 public:
  using Error::Error;
};

/// Malformed document: names the JSON path (or byte offset) and the shape
/// that was expected there.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A rule broken by a value. Validators return these as data instead of
/// throwing; `code` is stable, `message` is for humans.
struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

enum class Modulation { BPSK, QPSK };

inline constexpr Modulation kModulations[] = {Modulation::BPSK, Modulation::QPSK};

std::string_view to_string(Modulation m);
Modulation parse_modulation(std::string_view text);  // case-insensitive

/// Small fixed map keyed by modulation format.
template <typename T>
struct PerModulation {
  T bpsk{};
  T qpsk{};

  T& operator[](Modulation m) { return m == Modulation::BPSK ? bpsk : qpsk; }
  const T& operator[](Modulation m) const { return m == Modulation::BPSK ? bpsk : qpsk; }

  bool operator==(const PerModulation&) const = default;
};

}  // namespace awplan
