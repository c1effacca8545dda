#pragma once

#include <stdexcept>

namespace knorm {

// Input text or records that fail format/schema validation.  CLI exit 2.
struct malformed_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated (zero divisor, non-monic or
// reducible defining polynomial, zero symbol entry, ...).  CLI exit 3.
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A nonzero field element was certified to vanish under a real embedding,
// which witnesses that an "asserted" minimal polynomial is in fact
// reducible.  CLI exit 4.
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace knorm
