#pragma once

#include "cryptsteg/bits.hpp"
#include "cryptsteg/chaos.hpp"
#include "cryptsteg/cipher.hpp"
#include "cryptsteg/error.hpp"
#include "cryptsteg/image.hpp"
#include "cryptsteg/lsb.hpp"
#include "cryptsteg/metrics.hpp"
#include "cryptsteg/scheduler.hpp"
