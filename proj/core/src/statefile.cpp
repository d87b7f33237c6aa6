#include "threeqb/statefile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace threeqb {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string state_to_json(const PureState& psi, const std::string& label) {
  // Numbers are emitted as 17-significant-digit literals so that writing and
  // re-reading a state is bit-exact.
  std::ostringstream os;
  os << "{\n  \"amplitudes\": [\n";
  for (int i = 0; i < 8; ++i) {
    os << "    [" << fmt17(psi.amp[i].real()) << ", "
       << fmt17(psi.amp[i].imag()) << "]" << (i < 7 ? "," : "") << "\n";
  }
  os << "  ]";
  if (!label.empty()) os << ",\n  \"label\": " << nlohmann::json(label).dump();
  os << "\n}\n";
  return os.str();
}

StateFile state_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StateFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("amplitudes"))
    throw StateFileError("state file must be an object with \"amplitudes\"");
  const auto& amps = j["amplitudes"];
  if (!amps.is_array() || amps.size() != 8)
    throw StateFileError("\"amplitudes\" must hold exactly 8 [re, im] pairs");
  StateFile out;
  for (int i = 0; i < 8; ++i) {
    const auto& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw StateFileError("amplitude entries must be [re, im] number pairs");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw StateFileError("amplitudes must be finite");
    out.state.amp[i] = Complex(re, im);
  }
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw StateFileError("\"label\" must be a string");
    out.label = j["label"].get<std::string>();
  }
  return out;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return state_from_json(ss.str());
}

void write_state_file(const std::string& path, const PureState& psi,
                      const std::string& label) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFileError("cannot write state file: " + path);
  out << state_to_json(psi, label);
  if (!out) throw StateFileError("write failed: " + path);
}

StateFile resolve_state_spec(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = spec.substr(8);
    StateFile f;
    f.label = name;
    if (name == "ghz") f.state = states::ghz();
    else if (name == "w") f.state = states::w();
    else if (name == "bisep1") f.state = states::bisep(1);
    else if (name == "bisep2") f.state = states::bisep(2);
    else if (name == "bisep3") f.state = states::bisep(3);
    else if (name == "sep") f.state = states::separable();
    else if (name == "null") f.state = states::null_state();
    else
      throw StateFileError(
          "unknown builtin state \"" + name +
          "\" (known: ghz, w, bisep1, bisep2, bisep3, sep, null)");
    return f;
  }
  return read_state_file(spec);
}

}  // namespace threeqb
