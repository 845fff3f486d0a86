// Copyright 2026 The repattack Authors
//
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
#ifndef REPATTACK_SRC_HTTP_JSON_H_
#define REPATTACK_SRC_HTTP_JSON_H_

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace repattack::internal {

struct ParsedUrl {
  std::string scheme_host_port;  // "http://host:port"
  std::string path;              // "/path", defaults to "/"
};

// Throws PreconditionError for anything but http:// URLs.
ParsedUrl ParseUrl(const std::string& url);

using Headers = std::vector<std::pair<std::string, std::string>>;

// POSTs `body` and parses the JSON reply. Connection failures and non-2xx
// statuses raise TransportError (TimeoutError on read/connect timeouts);
// a 2xx reply that is not JSON raises MalformedResponse.
nlohmann::json PostJson(const std::string& url, const nlohmann::json& body,
                        std::chrono::milliseconds timeout,
                        const Headers& headers = {});

}  // namespace repattack::internal

#endif  // REPATTACK_SRC_HTTP_JSON_H_
