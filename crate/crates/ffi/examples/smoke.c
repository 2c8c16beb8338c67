#include "dp1.h"
#include <stdio.h>
int main(void){ Dp1Lattice *l=NULL; size_t n=0;
 if(dp1_lattice_new("4|0",&l)!=DP1_STATUS_OK) return 1;
 dp1_lattice_root_count(l,&n); printf("rank %zu roots %zu\n", dp1_lattice_rank(l), n); dp1_lattice_free(l);
 char *s=NULL; dp1_classify_json("|||",&s); printf("%.40s\n", s); dp1_string_free(s);
 printf("%s\n", dp1_status_message(DP1_STATUS_PARSE)); return 0;}
