// Copyright 2026 The polcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLCAP_POLCAP_HPP
#define POLCAP_POLCAP_HPP

#include "polcap/capacity.hpp"
#include "polcap/channel.hpp"
#include "polcap/classical.hpp"
#include "polcap/errors.hpp"
#include "polcap/group.hpp"
#include "polcap/matrix.hpp"
#include "polcap/measurement.hpp"
#include "polcap/protocol.hpp"
#include "polcap/qstate.hpp"
#include "polcap/random_states.hpp"

#endif  // POLCAP_POLCAP_HPP
