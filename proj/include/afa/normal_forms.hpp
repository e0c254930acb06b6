// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "afa/types.hpp"

namespace afa {

/// Equivalent (k+1)-state automaton whose initial state is e0. The first
/// symbol application injects A_x v0, so every nonempty word keeps its exact
/// value. An automaton started in e0 can only take the values 0 or 1 on the
/// empty word, so f(eps) survives exactly when it is 0 or 1 (state 0 joins
/// the accepting set when f_a(eps) = 1).
Afa canonicalInitial(const Afa& a);

/// Largest absolute value over all transition-matrix entries. The initial
/// vector does not participate.
Rational maxEntry(const Afa& a);

/// Equivalent (k+2)-state automaton whose state entries stay inside [-1,1]
/// on every prefix, preserving membership at cutpoint 1/2 in both the strict
/// and the equality sense. Requires the canonical initial state e0; the
/// entry bound C is rounded up to an integer c >= 2.
Afa boundedForm(const Afa& a);

/// shiftCutpoint(a, lambda, 1/2), then canonicalInitial, then boundedForm.
Afa normalizePipeline(const Afa& a, const Rational& lambda);

}  // namespace afa
