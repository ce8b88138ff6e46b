#pragma once

#include "monadic/abstract.hpp"
#include "monadic/class_spec.hpp"
#include "monadic/concrete.hpp"
#include "monadic/deciders.hpp"
#include "monadic/ef_game.hpp"
#include "monadic/error.hpp"
#include "monadic/formula.hpp"
#include "monadic/formula_io.hpp"
#include "monadic/normal_form.hpp"
#include "monadic/pred_set.hpp"
#include "monadic/profile.hpp"
#include "monadic/syntax.hpp"
#include "monadic/text_io.hpp"
#include "monadic/translations.hpp"
#include "monadic/types.hpp"
