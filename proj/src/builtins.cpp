//
//   Copyright 2026 The qlp Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//

#include <cassert>

#include "qlp/checklist.hpp"

namespace qlp {

namespace {

// Shorthand for the item initializers below.
constexpr auto kAlways = Applicability::always;
constexpr auto kHardware = Applicability::hardware_only;
constexpr auto kSimulator = Applicability::simulator_only;
constexpr auto kAuto = Automation::automatic;
constexpr auto kManual = Automation::manual;
constexpr auto kHybrid = Automation::hybrid;

ChecklistItem item(const char* id, const char* key, const char* section,
                   const char* title, const char* description,
                   Applicability applicability, Automation automation) {
  ChecklistItem it;
  it.id = id;
  it.key = key;
  it.section_id = section;
  it.title = title;
  it.description = description;
  it.applicability = {applicability, {}};
  it.automation = automation;
  return it;
}

Checklist make_reporting_v1() {
  Checklist c;
  c.id = "reporting-v1";
  c.title = "Quantum software experiment reporting checklist";
  c.sections = {
      {"context", "Context", 1},
      {"planning", "Experimental Planning", 2},
      {"design", "Experimental Design", 3},
      {"execution", "Execution", 4},
      {"analysis", "Analysis", 5},
      {"validity", "Threats to Validity", 6},
  };
  // Reporting items are judged from the article text, so none of them is
  // detector-backed.
  c.items = {
      item("CTX-01", "min-qubits", "context", "Minimum qubit count",
           "State the smallest number of qubits the experiment needs.",
           kAlways, kManual),
      item("CTX-02", "gate-requirements", "context", "Gate requirements",
           "List the gate set or native operations the circuits rely on.",
           kAlways, kManual),
      item("CTX-03", "measurements", "context", "Measurement requirements",
           "Report which qubits are measured and how the outcomes are used.",
           kAlways, kManual),
      item("CTX-04", "circuit-depth", "context", "Circuit depth",
           "Give the depth of the circuits, or bounds on it.",
           kAlways, kManual),
      item("CTX-05", "qubit-connectivity", "context", "Qubit connectivity",
           "Describe the coupling or topology the circuits assume.",
           kAlways, kManual),
      item("CTX-06", "platform-limitations", "context", "Platform limitations",
           "Note restrictions of the chosen platforms that shape the experiment.",
           kAlways, kManual),
      item("PLN-01", "bootstrapping", "planning", "Bootstrapping strategy",
           "Describe any bootstrapping or warm-up needed before measured runs.",
           kAlways, kManual),
      item("PLN-02", "execution-limitations", "planning", "Execution limitations",
           "State limits on execution time, cost or access factored into planning.",
           kAlways, kManual),
      item("PLN-03", "scheduling-limitations", "planning", "Scheduling limitations",
           "State queueing or scheduling constraints that shape the run plan.",
           kAlways, kManual),
      item("DSG-01", "shots-justification", "design", "Shot count justification",
           "Justify the number of shots per circuit.",
           kAlways, kManual),
      item("DSG-02", "state-initialization", "design", "State initialization",
           "Describe how initial states are prepared.",
           kAlways, kManual),
      item("EXE-01", "precision", "execution", "Hardware precision",
           "Report device precision and noise figures for the runs.",
           kHardware, kManual),
      item("EXE-02", "calibration", "execution", "Calibration data",
           "Record the calibration state of the device at execution time.",
           kHardware, kManual),
      item("EXE-03", "pre-post-processing", "execution", "Pre- and post-processing",
           "Document transpilation and any processing around the runs.",
           kAlways, kManual),
      item("EXE-04", "language-framework", "execution", "Languages and frameworks",
           "Name the programming languages and quantum frameworks used.",
           kAlways, kManual),
      item("EXE-05", "versions-dependencies", "execution", "Versions and dependencies",
           "Pin the versions of SDKs, compilers and other dependencies.",
           kAlways, kManual),
      item("EXE-06", "random-seeds", "execution", "Random seeds",
           "Report the seeds controlling stochastic parts of simulation.",
           kSimulator, kManual),
      item("EXE-07", "readout-mitigation", "execution", "Readout error mitigation",
           "State whether readout error mitigation was applied and how.",
           kAlways, kManual),
      item("ANA-01", "output-distributions", "analysis", "Output distributions",
           "Analyze measured output distributions rather than single outcomes.",
           kAlways, kManual),
      item("ANA-02", "error-mitigation", "analysis", "Error mitigation in analysis",
           "Describe error handling applied while analyzing results.",
           kAlways, kManual),
      item("VAL-01", "hardware-variation", "validity", "Hardware variation",
           "Discuss run-to-run variation across devices or calibration windows.",
           kAlways, kManual),
      item("VAL-02", "platform-portability", "validity", "Platform portability",
           "Discuss how far the results transfer to other platforms.",
           kAlways, kManual),
  };
  return c;
}

Checklist make_labpack_v1() {
  Checklist c;
  c.id = "labpack-v1";
  c.title = "Quantum software laboratory package checklist";
  c.sections = {
      {"article", "Article", 1},
      {"material", "Experimental Material", 2},
      {"datasets", "Datasets", 3},
      {"systems", "Systems", 4},
      {"scripts", "Scripts", 5},
      {"dictionary", "Dictionary", 6},
  };
  c.items = {
      item("ART-01", "paper", "article", "Scientific article",
           "Link or include the article the package supports.",
           kAlways, kAuto),
      item("ART-02", "experimental-design", "article", "Experimental design description",
           "Describe the experimental design the runs implement.",
           kAlways, kManual),
      item("ART-03", "context", "article", "Context description",
           "Describe the context and motivation of the experiment.",
           kAlways, kManual),
      item("ART-04", "authors", "article", "Author identification",
           "Identify the authors and how to reach them.",
           kAlways, kAuto),
      item("MAT-01", "instructions", "material", "Experiment instructions",
           "Provide step-by-step instructions for repeating the experiment.",
           kAlways, kHybrid),
      item("MAT-02", "models-diagrams", "material", "Models and diagrams",
           "Include models, circuit diagrams or other design artifacts.",
           kAlways, kManual),
      item("MAT-03", "materials", "material", "Experimental materials",
           "Include the materials the experiment consumes.",
           kAlways, kManual),
      item("DAT-01", "pre-data", "datasets", "Pre-experiment data",
           "Ship the input data the experiment starts from.",
           kAlways, kAuto),
      item("DAT-02", "processing", "datasets", "Processing artifacts",
           "Ship intermediate processing artifacts or describe the pipeline.",
           kAlways, kManual),
      item("DAT-03", "results-data", "datasets", "Result data",
           "Ship the result data the article reports on.",
           kAlways, kAuto),
      item("SYS-01", "hw-requirements", "systems", "Hardware requirements",
           "Document quantum hardware needs: provider, device, qubit count.",
           kAlways, kManual),
      item("SYS-02", "platform-constraints", "systems", "Platform constraints",
           "Document platform constraints such as availability and qubit limits.",
           kAlways, kManual),
      item("SYS-03", "classical-software", "systems", "Classical software",
           "Document the classical software stack.",
           kAlways, kManual),
      item("SYS-04", "quantum-software", "systems", "Quantum software",
           "Document the quantum software stack: paradigm, algorithm, shots.",
           kAlways, kManual),
      item("SCR-01", "procedure", "scripts", "Experimental procedure",
           "Script the experimental procedure end to end.",
           kAlways, kManual),
      item("SCR-02", "analysis-script", "scripts", "Analysis scripts",
           "Ship the scripts that turn raw outputs into reported figures.",
           kAlways, kManual),
      item("SCR-03", "logs", "scripts", "Execution logs",
           "Keep raw execution logs in common, inspectable formats.",
           kAlways, kAuto),
      item("DIC-01", "artifact-descriptions", "dictionary", "Artifact descriptions",
           "Describe every artifact in the package.",
           kAlways, kManual),
      item("DIC-02", "inventory", "dictionary", "Artifact inventory",
           "Keep an inventory of artifacts with a URL or path for each.",
           kAlways, kAuto),
      item("DIC-03", "download-instructions", "dictionary", "Download instructions",
           "Explain how to obtain the artifacts.",
           kAlways, kHybrid),
      item("DIC-04", "run-instructions", "dictionary", "Run instructions",
           "Explain how to run the artifacts.",
           kAlways, kHybrid),
      item("DIC-05", "artifact-license", "dictionary", "Artifact licenses",
           "State the license of each artifact.",
           kAlways, kAuto),
      item("DIC-06", "virtual-env", "dictionary", "Virtual environment",
           "Provide a container or virtual environment definition.",
           kAlways, kAuto),
      item("DIC-07", "dev-env-definition", "dictionary", "Development environment definition",
           "Define the environment the package was developed in.",
           kAlways, kManual),
      item("DIC-08", "dev-env-guidelines", "dictionary", "Development environment guidelines",
           "Provide setup guidelines for the development environment.",
           kAlways, kHybrid),
      item("DIC-09", "verification", "dictionary", "Verification procedure",
           "Provide a procedure to verify the package works as shipped.",
           kAlways, kManual),
      item("DIC-10", "decisions", "dictionary", "Decision record",
           "Record design and methodological decisions.",
           kAlways, kManual),
      item("DIC-11", "doi", "dictionary", "Digital object identifier",
           "Give the package a persistent digital object identifier.",
           kAlways, kAuto),
      item("DIC-12", "lp-license", "dictionary", "Package license",
           "License the package as a whole.",
           kAlways, kAuto),
  };
  return c;
}

}  // namespace

const std::vector<Checklist>& builtin_checklists() {
  static const std::vector<Checklist> all = [] {
    std::vector<Checklist> v;
    v.push_back(make_reporting_v1());
    v.push_back(make_labpack_v1());
    for (const auto& c : v) assert(validate_checklist(c).empty());
    return v;
  }();
  return all;
}

const Checklist* find_builtin(std::string_view id) {
  for (const auto& c : builtin_checklists()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace qlp
