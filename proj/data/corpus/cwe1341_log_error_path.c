#include <stdio.h>

int main(void)
{
    FILE *log = fopen("run.log", "a");
    if (!log)
        return 1;
    if (fputs("start\n", log) < 0) {
        perror("fputs");
        fclose(log);
    }
    fprintf(log, "done\n");
    fclose(log);
    return 0;
}
