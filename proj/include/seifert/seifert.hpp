#pragma once

#include "seifert/arith.hpp"
#include "seifert/decider.hpp"
#include "seifert/errors.hpp"
#include "seifert/fingerprint.hpp"
#include "seifert/homcount.hpp"
#include "seifert/invariants.hpp"
#include "seifert/low_index.hpp"
#include "seifert/perm_group.hpp"
#include "seifert/presentation.hpp"
#include "seifert/reidemeister_schreier.hpp"
#include "seifert/smith.hpp"
#include "seifert/symbol.hpp"
