/*
   Copyright 2026 The freefall Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace freefall {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical input violated a precondition (non-positive radius, t < 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A root solve could not bracket or converge.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Malformed or invalid configuration. `line` is 0 for command-line overrides.
class ConfigError : public Error {
public:
    ConfigError(int line, std::string key, const std::string& message)
        : Error(format(line, key, message)), line_(line), key_(std::move(key))
    {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    static std::string format(int line, const std::string& key, const std::string& message)
    {
        std::string where = line > 0 ? "line " + std::to_string(line) : std::string("override");
        if (!key.empty())
            where += ", key '" + key + "'";
        return "config error (" + where + "): " + message;
    }

    int line_;
    std::string key_;
};

}  // namespace freefall
