/*
 * Copyright 2026 The groupauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The groupauth command-line tool, callable in-process for tests.

#ifndef GROUPAUTH_TOOLS_CLI_H_
#define GROUPAUTH_TOOLS_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace groupauth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// All file access made by a command goes through this interface.
class FileSystem {
 public:
  virtual ~FileSystem() = default;
  // Throws std::runtime_error if the file cannot be read.
  virtual std::string Read(const std::filesystem::path& path) = 0;
  virtual void Write(const std::filesystem::path& path,
                     const std::string& contents) = 0;
  virtual bool Exists(const std::filesystem::path& path) = 0;
  virtual void CreateDirectories(const std::filesystem::path& path) = 0;
};

class DiskFileSystem : public FileSystem {
 public:
  std::string Read(const std::filesystem::path& path) override;
  void Write(const std::filesystem::path& path,
             const std::string& contents) override;
  bool Exists(const std::filesystem::path& path) override;
  void CreateDirectories(const std::filesystem::path& path) override;
};

// args excludes the program name. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, FileSystem& fs);
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// File name compile uses for a holder's share.
std::string ShareFileName(const std::string& holder);

}  // namespace groupauth::cli

#endif  // GROUPAUTH_TOOLS_CLI_H_
