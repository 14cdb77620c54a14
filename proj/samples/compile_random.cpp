// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Compiles a random 3-qubit unitary with both orderings and prints the gate
// counts before and after cancellation, then checks the circuit by
// simulation.

#include <iostream>

#include "tlsynth/tlsynth.hpp"

int main() {
    using namespace tlsynth;
    const int n = 3;
    const Matrix u = random_unitary(n, 2024);

    for (const auto &[name, order] :
         {std::pair{"conventional", conventional_order(n)},
          std::pair{"poa", poa_order(n)}}) {
        const Decomposition d = two_level_decompose(u, order);
        const Circuit raw = construct_circuit(d);
        const Circuit cancelled = cancel_pass(raw);
        std::cout << name << ": " << d.factors.size() << " factors, "
                  << raw.gates.size() << " gates, " << cancelled.gates.size()
                  << " after cancellation; " << verify(u, cancelled) << '\n';
    }
    return 0;
}
