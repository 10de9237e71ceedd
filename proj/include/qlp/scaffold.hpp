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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qlp/manifest.hpp"

namespace qlp {

struct ScaffoldOptions {
  std::string title = "Laboratory package";
  std::vector<Author> authors;
  std::optional<std::string> license;  // SPDX identifier; adds a LICENSE stub
  std::optional<std::string> doi;
  bool force = false;  // write into a non-empty directory
};

struct ScaffoldReport {
  std::vector<std::string> created_dirs;   // relative, creation order
  std::vector<std::string> created_files;  // relative, creation order
};

/// Create a fresh laboratory package skeleton: the section directory tree,
/// a README whose headings the hybrid detectors recognize, a container
/// stub under env/, a canonical labpack.json whose attestation table holds
/// a TODO placeholder for every labpack-v1 item, and a LICENSE stub when a
/// license is given. Refuses a non-empty target unless forced
/// (TargetNotEmptyError); bad options (empty title, invalid DOI, nameless
/// author) throw SchemaError; write failures throw IoError.
ScaffoldReport scaffold(const std::filesystem::path& target_dir,
                        const ScaffoldOptions& options);

}  // namespace qlp
