#pragma once

#include "errors.hpp"
#include "group.hpp"
#include "gset.hpp"
#include "intlinalg.hpp"
#include "io.hpp"
#include "localization.hpp"
#include "norms.hpp"
#include "perm.hpp"
#include "presets.hpp"
#include "ring.hpp"
