#pragma once

#include <stdexcept>
#include <string>

namespace symgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested dense expansion or product would exceed the configured entry cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Operand shapes do not conform (product dims, row lengths, permutation sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An index or argument is outside its documented range.
class ValueError : public Error {
 public:
  using Error::Error;
};

// A document could not be parsed into a game or number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact computation left the 64-bit rational range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace symgame
