#include "qsim/display.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qsim {

std::string py_float_repr(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

double round_half_even(double v, int decimals) {
  if (decimals < 0) throw std::invalid_argument("round_half_even: decimals < 0");
  // printf does correct decimal rounding (ties to even) of the exact
  // binary value, which is what Python's round() produces
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_amplitude(cplx z, int precision) {
  double re = round_half_even(z.real(), precision);
  double im = round_half_even(z.imag(), precision);
  if (re == 0.0 && im == 0.0) return "";
  if (im == 0.0) return py_float_repr(re);
  if (re == 0.0) return py_float_repr(im) + "j";
  return py_float_repr(re) + (im < 0 ? "-" : "+") + py_float_repr(std::fabs(im)) +
         "j";
}

std::string format_wavefunction(const Statevector& st,
                                const DisplayOptions& opts) {
  if (opts.precision < 1)
    throw std::invalid_argument("precision must be at least 1");
  if (opts.systems) {
    for (int v : *opts.systems)
      if (v < 1)
        throw std::invalid_argument("systems must be an array of all integers");
    if (opts.show_systems) {
      if (opts.show_systems->size() != opts.systems->size())
        throw std::invalid_argument(
            "systems and show_systems need to be arrays of equal length");
      for (int v : *opts.show_systems)
        if (v != 0 && v != 1)
          throw std::invalid_argument(
              "show_systems must be an array of Truth Values");
    }
  }

  // precompute chunk offsets and the last visible chunk
  int last_shown = -1;
  if (opts.systems) {
    for (std::size_t g = 0; g < opts.systems->size(); ++g) {
      bool shown = !opts.show_systems || (*opts.show_systems)[g] == 1;
      if (shown) last_shown = int(g);
    }
  }

  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < st.amps.size(); ++i) {
    std::string amp = format_amplitude(st.amps[i], opts.precision);
    if (amp.empty()) continue;

    std::string ket(std::size_t(st.num_qubits), '0');
    for (int q = 0; q < st.num_qubits; ++q)
      if ((i >> q) & 1) ket[std::size_t(q)] = '1';

    std::string shown_ket;
    if (opts.systems) {
      std::size_t pos = 0;
      for (std::size_t g = 0; g < opts.systems->size(); ++g) {
        std::size_t len = std::size_t((*opts.systems)[g]);
        std::string chunk = ket.substr(std::min(pos, ket.size()),
                                       len);
        pos += len;
        bool shown = !opts.show_systems || (*opts.show_systems)[g] == 1;
        if (!shown) continue;
        shown_ket += chunk;
        if (int(g) != last_shown) shown_ket += ">|";
      }
    } else {
      shown_ket = ket;
    }

    if (!first) out += opts.column ? "\n" : "  ";
    first = false;
    out += amp + " |" + shown_ket + ">";
  }
  return out;
}

std::string format_counts(const std::map<std::string, long long>& counts,
                          bool column) {
  struct Entry {
    long long count;
    std::string ket;
  };
  std::vector<Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [key, count] : counts)
    entries.push_back({count, std::string(key.rbegin(), key.rend())});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.ket < b.ket;
  });
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += column ? "\n" : "  ";
    out += std::to_string(entries[i].count) + "|" + entries[i].ket + ">";
  }
  return out;
}

}  // namespace qsim
