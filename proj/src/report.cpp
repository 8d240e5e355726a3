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
#include "h3cover/report.hpp"

namespace h3cover {

namespace {

template <std::size_t N>
json coords(const std::array<Scalar, N>& c) {
  json out = json::array();
  for (auto s : c) out.push_back(s.bits);
  return out;
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "sample"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "not-applicable";
  }
  return "fail";
}

void Report::violation(json witness) {
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Report::violations_from(std::vector<IndexedWitness> found) {
  std::sort(found.begin(), found.end(),
            [](const IndexedWitness& a, const IndexedWitness& b) { return a.index < b.index; });
  for (auto& w : found) violation(std::move(w.witness));
}

Report& Report::finish() {
  if (status != Status::not_applicable) status = violations == 0 ? Status::pass : Status::fail;
  return *this;
}

json Report::to_json() const {
  json out;
  out["check"] = check;
  out["field"] = field;
  out["mode"] = to_string(mode);
  out["samples"] = samples;
  out["violations"] = violations;
  out["witnesses"] = witnesses;
  out["details"] = details;
  out["status"] = to_string(status);
  return out;
}

Report not_applicable(std::string check, int field, std::string reason) {
  Report r;
  r.check = std::move(check);
  r.field = field;
  r.status = Status::not_applicable;
  r.details["reason"] = std::move(reason);
  return r;
}

json to_json(const Vector& v) { return coords(v.c); }
json to_json(const Covector& h) { return coords(h.c); }
json to_json(const Bivector& b) { return coords(b.c); }
json to_json(const SymTensor& s) { return coords(s.c); }
json to_json(const NElement& n) { return to_json(n.rep()); }
json to_json(const AffineVertex& a) { return {{"v", to_json(a.v)}, {"h", to_json(a.h)}}; }
json to_json(const ProjVertex& p) { return {{"v", to_json(p.v)}, {"h", to_json(p.h)}}; }

json combine(const std::string& check, int field, const std::vector<Report>& parts) {
  json out;
  out["check"] = check;
  out["field"] = field;
  Status worst = Status::not_applicable;
  json list = json::array();
  for (const auto& r : parts) {
    list.push_back(r.to_json());
    if (r.status == Status::fail) worst = Status::fail;
    else if (r.status == Status::pass && worst == Status::not_applicable) worst = Status::pass;
  }
  out["status"] = to_string(worst);
  out["reports"] = std::move(list);
  return out;
}

}  // namespace h3cover
