// Copyright 2026 The bosh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosh/importer.hpp"

#include <stdexcept>

namespace bosh {

Descriptor import_bids(const std::string& app_name, const std::string& image_ref,
                       const std::string& version) {
  if (app_name.empty()) throw std::invalid_argument("BIDS app name must not be empty");
  if (image_ref.empty()) throw std::invalid_argument("BIDS app image must not be empty");
  if (version.empty()) throw std::invalid_argument("BIDS app version must not be empty");

  Descriptor d;
  d.name = app_name;
  d.tool_version = version;
  d.description = "BIDS app " + app_name + " (" + image_ref + ")";
  d.schema_version = std::string(kSchemaVersion);
  d.command_line =
      "mkdir -p [OUTPUT_DIR]; /run.py [BIDS_DIR] [OUTPUT_DIR] [ANALYSIS_LEVEL] "
      "[PARTICIPANT_LABEL]";

  Input bids_dir;
  bids_dir.id = "bids_dir";
  bids_dir.name = "BIDS dataset directory";
  bids_dir.type = InputType::kFile;
  bids_dir.description = "Root folder of a BIDS-formatted input dataset.";
  bids_dir.value_key = "[BIDS_DIR]";

  Input output_dir;
  output_dir.id = "output_dir_name";
  output_dir.name = "Output directory name";
  output_dir.type = InputType::kString;
  output_dir.description = "Directory where the app writes its results.";
  output_dir.value_key = "[OUTPUT_DIR]";

  Input analysis_level;
  analysis_level.id = "analysis_level";
  analysis_level.name = "Analysis level";
  analysis_level.type = InputType::kString;
  analysis_level.description =
      "participant runs per-subject analyses; group aggregates participant results.";
  analysis_level.value_key = "[ANALYSIS_LEVEL]";
  analysis_level.value_choices = std::vector<Json>{"participant", "group"};

  Input participant_label;
  participant_label.id = "participant_label";
  participant_label.name = "Participant labels";
  participant_label.type = InputType::kString;
  participant_label.optional = true;
  participant_label.list = true;
  participant_label.description =
      "Labels of the participants to analyze (without the sub- prefix).";
  participant_label.value_key = "[PARTICIPANT_LABEL]";
  participant_label.command_line_flag = "--participant_label";

  d.inputs = {bids_dir, output_dir, analysis_level, participant_label};

  OutputFile output;
  output.id = "output_dir";
  output.name = "Output directory";
  output.description = "Results written by the BIDS app.";
  output.path_template = "[OUTPUT_DIR]";
  d.output_files = {output};

  ContainerSpec container;
  container.type = ContainerType::kDocker;
  container.image = image_ref;
  d.container = container;
  return d;
}

}  // namespace bosh
