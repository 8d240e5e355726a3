/* Copyright 2026 The h3cover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "h3cover/voltage.hpp"

namespace h3cover {

ExtensionElement compose(const Field& F, const ExtensionElement& a, const ExtensionElement& b) {
  return {mul(F, a.g, b.g), act_n(F, b.g, a.n) + b.n};
}

LiftVertex<NElement> act_extension(const ProjectiveGraph& g, const LiftVertex<NElement>& x,
                                   const ExtensionElement& e) {
  const Field& F = g.field();
  const NElement tag = act_n(F, e.g, x.tag) + e.n;
  const auto image = g.index_of(act(F, g.vertex(x.base), e.g));
  return {*image, tag};
}

}  // namespace h3cover
