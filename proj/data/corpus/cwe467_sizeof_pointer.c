#include <stdlib.h>
#include <string.h>

int main(void)
{
    double *values = malloc(10 * sizeof(double));
    memset(values, 0, sizeof(values));
    free(values);
    return 0;
}
