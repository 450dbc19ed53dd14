#ifndef KRASNER_KRASNER_HPP
#define KRASNER_KRASNER_HPP

#include "krasner/construct.hpp"
#include "krasner/core.hpp"
#include "krasner/element_set.hpp"
#include "krasner/enumerate.hpp"
#include "krasner/error.hpp"
#include "krasner/galois.hpp"
#include "krasner/io_format.hpp"
#include "krasner/iso.hpp"
#include "krasner/report.hpp"

#endif  // KRASNER_KRASNER_HPP
