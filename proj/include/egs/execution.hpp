#pragma once

#include <exception>
#include <mutex>

namespace egs {

/// Kernels with an OpenMP implementation also keep the serial reference path;
/// both must produce identical results.
enum class Execution { serial, parallel };

/// Collects the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace egs
