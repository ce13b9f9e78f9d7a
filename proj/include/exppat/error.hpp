#pragma once

#include <stdexcept>
#include <string>

namespace exppat {

enum class Errc {
  IncompleteColoring,
  ColorOutOfRange,
  BadWindow,
  WindowTooSmall,
  WindowExceeded,
  NotThickEnough,
  NoWitnessInWindow,
  NoRichColor,
  NoWitnessInBudget,
  PreconditionFailed,
  MalformedSequence,
  ParseError,
  BadArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IncompleteColoring: return "IncompleteColoring";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::BadWindow: return "BadWindow";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::WindowExceeded: return "WindowExceeded";
    case Errc::NotThickEnough: return "NotThickEnough";
    case Errc::NoWitnessInWindow: return "NoWitnessInWindow";
    case Errc::NoRichColor: return "NoRichColor";
    case Errc::NoWitnessInBudget: return "NoWitnessInBudget";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::MalformedSequence: return "MalformedSequence";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace exppat
