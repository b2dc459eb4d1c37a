#pragma once

#include <stdexcept>
#include <string>

namespace qmatch {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DuplicateEdge : public Error {
  public:
    using Error::Error;
};

class InvalidEdge : public Error {
  public:
    using Error::Error;
};

class NotAPermutation : public Error {
  public:
    using Error::Error;
};

class OrderingUndefined : public Error {
  public:
    using Error::Error;
};

class ZeroNorm : public Error {
  public:
    using Error::Error;
};

class NotNormalized : public Error {
  public:
    using Error::Error;
};

class NotAMatching : public Error {
  public:
    using Error::Error;
};

class CapExceeded : public Error {
  public:
    using Error::Error;
};

class InvalidConfig : public Error {
  public:
    using Error::Error;
};

} // namespace qmatch
