#ifndef QLC_QLC_HPP
#define QLC_QLC_HPP

#include "qlc/bounds.hpp"
#include "qlc/families.hpp"
#include "qlc/hyper.hpp"
#include "qlc/report.hpp"
#include "qlc/symmetric.hpp"
#include "qlc/verifier.hpp"

#endif // QLC_QLC_HPP
