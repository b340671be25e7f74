#pragma once

#include "wcifano/db.hpp"

#include <stdexcept>

// Tests run with the repository root as working directory (see CMakeLists),
// so the canonical database is reachable at its default relative path.
namespace testdb {

inline const wcifano::Database& canonical() {
    static wcifano::Database db = wcifano::load_db("data/families.json");
    return db;
}

inline const wcifano::Family& fam(int no) {
    const wcifano::Family* f = wcifano::find_family(canonical(), no);
    if (!f)
        throw std::runtime_error("test fixture: family " + std::to_string(no) +
                                 " missing from the canonical database");
    return *f;
}

} // namespace testdb
