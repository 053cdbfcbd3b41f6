# Calibrating the voting weights
#
# One mock is reliable and two are noisy. A grid search over weights in
# {1, 2, 3} on validation data should hand the reliable one the largest
# weight.

# In[1]:

from resume_ensemble.calibrate import default_grid, rs_weight_sweep, scale_class
from resume_ensemble.simulation import planted_calibration, phone_noisy_pairs

# 27 grid points but only 25 distinct outcomes: (1,1,1), (2,2,2) and (3,3,3)
# are multiples of each other and always give the same aggregate.

# In[2]:

grid = default_grid(["noisy_b", "noisy_c", "reliable"])
print(len(grid), "points,", len({scale_class(w) for w in grid}), "scale classes")

# In[3]:

result = planted_calibration(seed=0)
print(result.table())
print("best:", result.best_weights)

# How much the RS composite rewards skills. On a corpus where skills are
# always right and phones often wrong, moving weight onto skills raises RS.

# In[4]:

pairs = phone_noisy_pairs(seed=0)
for weight, rs in rs_weight_sweep(pairs, [0.0, 0.2, 0.35, 0.5]):
    print(f"skills weight {weight:.2f}  RS {100 * rs:.2f}")
