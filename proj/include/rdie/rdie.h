// Copyright 2026 The RDIE Authors. All Rights Reserved.
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

// Umbrella header for the RDIE library.

#ifndef RDIE_RDIE_H_
#define RDIE_RDIE_H_

#include "rdie/bench.h"
#include "rdie/correlation.h"
#include "rdie/entropy.h"
#include "rdie/error.h"
#include "rdie/harness.h"
#include "rdie/image.h"
#include "rdie/manifest.h"
#include "rdie/metrics.h"
#include "rdie/parallel.h"
#include "rdie/png_io.h"
#include "rdie/report.h"

#endif  // RDIE_RDIE_H_
