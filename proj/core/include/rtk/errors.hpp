#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtk {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line of a line-oriented input could not be turned into a record.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line_no, std::string cause)
      : Error("line " + std::to_string(line_no) + ": " + cause),
        line_no_(line_no),
        cause_(std::move(cause)) {}

  std::size_t line_no() const noexcept { return line_no_; }
  const std::string& cause() const noexcept { return cause_; }

 private:
  std::size_t line_no_;
  std::string cause_;
};

class MissingField : public Error {
 public:
  MissingField(std::string field, std::size_t line_no)
      : Error("line " + std::to_string(line_no) + ": missing field '" + field + "'"),
        field_(std::move(field)),
        line_no_(line_no) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::string field_;
  std::size_t line_no_;
};

/// The commit log carries no maven-release-plugin tags; an explicit manifest is needed.
class NoReleaseTagsFound : public Error {
 public:
  NoReleaseTagsFound()
      : Error("no '[maven-release-plugin] prepare release' commits found; supply a release manifest") {}
};

class NoTaggedCommits : public Error {
 public:
  explicit NoTaggedCommits(const std::string& release_id)
      : Error("release '" + release_id + "' has no commits tagged by its resolved issues"),
        release_id_(release_id) {}

  const std::string& release_id() const noexcept { return release_id_; }

 private:
  std::string release_id_;
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("empty sequence corpus") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("state '" + symbol + "' is not in the substitution cost alphabet"), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class InvalidK : public Error {
 public:
  InvalidK(std::size_t k, std::size_t n)
      : Error("cannot cut " + std::to_string(n) + " items into " + std::to_string(k) + " clusters") {}
};

/// Structural problem with a release window or manifest.
class InvalidRelease : public Error {
 public:
  using Error::Error;
};

}  // namespace rtk
