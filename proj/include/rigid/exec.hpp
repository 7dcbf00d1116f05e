#pragma once

namespace rigid {

// Selects between the OpenMP kernel and its serial reference. Both paths
// must produce identical results; the serial one exists for testing and
// benchmarking.
enum class Exec { serial, parallel };

}  // namespace rigid
