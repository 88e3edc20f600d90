/*
* Copyright (C) 2026 satsc contributors
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
#ifndef SATSC_ERRORS_HPP
#define SATSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace satsc {

/// Malformed or inconsistent configuration (config files, quality tables, schema fields).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance has fewer subcarriers than mandatory links, or no zero-violation assignment exists.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A link with zero or negative rate was asked for a latency.
class UnservableLinkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace satsc

#endif // SATSC_ERRORS_HPP
