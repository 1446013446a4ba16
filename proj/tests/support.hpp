#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "doctest.h"
#include "lix/error.hpp"
#include "lix/measures.hpp"

namespace testing {

inline lix::ErrorCode error_code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const lix::Error& e) {
        return e.code();
    }
    FAIL("expected lix::Error");
    return lix::ErrorCode::Io;
}

inline std::string error_where_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const lix::Error& e) {
        return e.where();
    }
    FAIL("expected lix::Error");
    return {};
}

inline lix::Date ymd(int y, unsigned m, unsigned d) {
    return lix::Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
}

inline lix::DailyBar bar(double open, double high, double low, double close, double volume,
                         lix::Date date = ymd(2013, 11, 20), std::string id = "X") {
    return lix::DailyBar{std::move(id), date, open, high, low, close, volume};
}

}  // namespace testing

#define CHECK_LIX_ERROR(expr, code) CHECK(testing::error_code_of([&] { (void)(expr); }) == (code))
