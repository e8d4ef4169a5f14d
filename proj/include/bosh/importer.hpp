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

#ifndef BOSH_IMPORTER_HPP_
#define BOSH_IMPORTER_HPP_

#include <string>

#include "bosh/descriptor.hpp"

namespace bosh {

inline constexpr const char* kBidsDefaultVersion = "latest";

// Descriptor for a BIDS app packaged as a docker image, following the
// positional bids_dir / output_dir / analysis_level interface with optional
// --participant_label. Throws std::invalid_argument on empty name or image.
Descriptor import_bids(const std::string& app_name, const std::string& image_ref,
                       const std::string& version = kBidsDefaultVersion);

}  // namespace bosh

#endif  // BOSH_IMPORTER_HPP_
